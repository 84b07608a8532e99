char slash = '/';
char star = '*';
char quote = '"';
// after the literals
done();
