// alpha note

// beta note
int separate = 2;
