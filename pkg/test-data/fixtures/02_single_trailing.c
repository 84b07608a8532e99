int y = 1; // tracks retries
f(y);
