// PRESENT S-box, algebraic normal form, 8 AND gates. x0 and y0 are the LSBs.
int present_sbox(bool x0, bool x1, bool x2, bool x3, bool *y0, bool *y1, bool *y2, bool *y3)
{
    t12_0 = x1 * x2;
    t13_0 = x1 * x3;
    t23_0 = x2 * x3;
    t01_0 = x0 * x1;
    t03_0 = x0 * x3;
    t012_0 = x0 * t12_0;
    t013_0 = x0 * t13_0;
    t023_0 = x0 * t23_0;
    u0_0 = x0 ^ x2;
    u0_1 = u0_0 ^ t12_0;
    u0_2 = u0_1 ^ x3;
    u1_0 = x1 ^ t012_0;
    u1_1 = u1_0 ^ x3;
    u1_2 = u1_1 ^ t13_0;
    u1_3 = u1_2 ^ t013_0;
    u1_4 = u1_3 ^ t23_0;
    u1_5 = u1_4 ^ t023_0;
    u2_0 = t01_0 ^ x2;
    u2_1 = u2_0 ^ x3;
    u2_2 = u2_1 ^ t03_0;
    u2_3 = u2_2 ^ t13_0;
    u2_4 = u2_3 ^ t013_0;
    u2_5 = u2_4 ^ t023_0;
    u2n0 = ~u2_5;
    u3_0 = x0 ^ x1;
    u3_1 = u3_0 ^ t12_0;
    u3_2 = u3_1 ^ t012_0;
    u3_3 = u3_2 ^ x3;
    u3_4 = u3_3 ^ t013_0;
    u3_5 = u3_4 ^ t023_0;
    u3n0 = ~u3_5;
    *y0 = u0_2;
    *y1 = u1_5;
    *y2 = u2n0;
    *y3 = u3n0;
    return 0;
}
