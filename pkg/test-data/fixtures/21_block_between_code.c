a(); /* between calls */ b();
c();
