char* t = "/* also not a comment */";
// real comment about t
print(t);
