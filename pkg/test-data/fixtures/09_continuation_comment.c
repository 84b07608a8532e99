int y = 1; // trailing\
 still comment
f();
