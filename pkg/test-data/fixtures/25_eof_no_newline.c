int z = 9;
// final words