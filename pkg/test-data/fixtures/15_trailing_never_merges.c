setup(); // trailing note
// standalone note
run();
