char* s = "he said \"hi\" // still a string";
// escape survivor
use(s);
