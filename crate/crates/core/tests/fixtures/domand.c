// DOM-masked AND, registers not yet placed.
int domand(bool a0, bool a1, bool b0, bool b1, bool z,
           bool *y0, bool *y1)
{
    p2 = a0 * b1;
    i1 = p2 ^ z;
    p3 = a1 * b0;
    i2 = p3 ^ z;
    p1 = a0 * b0;
    p4 = a1 * b1;
    *y0 = *i1 ^ p1;
    *y1 = *i2 ^ p4;
    return 0;
}
