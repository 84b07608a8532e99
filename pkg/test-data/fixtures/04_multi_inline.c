int x = /* inline note */ 5;
use(x);
