// crlf comment
int w = 1;
