x(); /* spans
two lines */
y();
