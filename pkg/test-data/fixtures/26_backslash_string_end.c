char* p = "ends with \\";
// after escape-heavy string
use(p);
