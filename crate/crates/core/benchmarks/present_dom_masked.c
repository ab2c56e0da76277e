int present_sbox(bool x0_s0, bool x0_s1, bool x1_s0, bool x1_s1, bool x2_s0, bool x2_s1, bool x3_s0, bool x3_s1, bool g1_r, bool g2_r, bool g3_r, bool g4_r, bool g5_r, bool g6_r, bool g7_r, bool g8_r, bool *y0_s0, bool *y0_s1, bool *y1_s0, bool *y1_s1, bool *y2_s0, bool *y2_s1, bool *y3_s0, bool *y3_s1)
{
    g1_p10 = x0_s1 * x1_s0;
    g1_p00 = x0_s0 * x1_s0;
    u3_0_s0 = x0_s0 ^ x1_s0;
    g1_p01 = x0_s0 * x1_s1;
    g1_p11 = x0_s1 * x1_s1;
    u3_0_s1 = x0_s1 ^ x1_s1;
    g2_p10 = x1_s1 * x2_s0;
    g2_p00 = x1_s0 * x2_s0;
    u0_0_s0 = x0_s0 ^ x2_s0;
    g2_p01 = x1_s0 * x2_s1;
    g2_p11 = x1_s1 * x2_s1;
    u0_0_s1 = x0_s1 ^ x2_s1;
    g4_p10 = x1_s1 * x3_s0;
    g4_p00 = x1_s0 * x3_s0;
    g6_p10 = x2_s1 * x3_s0;
    g6_p00 = x2_s0 * x3_s0;
    g8_p10 = x0_s1 * x3_s0;
    g8_p00 = x0_s0 * x3_s0;
    g4_p01 = x1_s0 * x3_s1;
    g4_p11 = x1_s1 * x3_s1;
    g6_p01 = x2_s0 * x3_s1;
    g6_p11 = x2_s1 * x3_s1;
    g8_p01 = x0_s0 * x3_s1;
    g8_p11 = x0_s1 * x3_s1;
    g1_i01 = reg(g1_p01 ^ g1_r);
    t01_0_s0 = g1_i01 ^ g1_p00;
    u2_0_s0 = t01_0_s0 ^ x2_s0;
    u2_1_s0 = u2_0_s0 ^ x3_s0;
    g1_i10 = reg(g1_p10 ^ g1_r);
    t01_0_s1 = g1_i10 ^ g1_p11;
    u2_0_s1 = t01_0_s1 ^ x2_s1;
    u2_1_s1 = u2_0_s1 ^ x3_s1;
    g2_i01 = reg(g2_p01 ^ g2_r);
    t12_0_s0 = g2_i01 ^ g2_p00;
    g3_p10 = x0_s1 * t12_0_s0;
    g3_p00 = x0_s0 * t12_0_s0;
    u3_1_s0 = u3_0_s0 ^ t12_0_s0;
    u0_1_s0 = u0_0_s0 ^ t12_0_s0;
    u0_2_s0 = u0_1_s0 ^ x3_s0;
    g2_i10 = reg(g2_p10 ^ g2_r);
    t12_0_s1 = g2_i10 ^ g2_p11;
    g3_p01 = x0_s0 * t12_0_s1;
    g3_p11 = x0_s1 * t12_0_s1;
    u3_1_s1 = u3_0_s1 ^ t12_0_s1;
    u0_1_s1 = u0_0_s1 ^ t12_0_s1;
    u0_2_s1 = u0_1_s1 ^ x3_s1;
    g3_i01 = reg(g3_p01 ^ g3_r);
    t012_0_s0 = g3_i01 ^ g3_p00;
    u1_0_s0 = x1_s0 ^ t012_0_s0;
    u1_1_s0 = u1_0_s0 ^ x3_s0;
    u3_2_s0 = u3_1_s0 ^ t012_0_s0;
    u3_3_s0 = u3_2_s0 ^ x3_s0;
    g3_i10 = reg(g3_p10 ^ g3_r);
    t012_0_s1 = g3_i10 ^ g3_p11;
    u1_0_s1 = x1_s1 ^ t012_0_s1;
    u1_1_s1 = u1_0_s1 ^ x3_s1;
    u3_2_s1 = u3_1_s1 ^ t012_0_s1;
    u3_3_s1 = u3_2_s1 ^ x3_s1;
    g4_i01 = reg(g4_p01 ^ g4_r);
    t13_0_s0 = g4_i01 ^ g4_p00;
    g5_p10 = x0_s1 * t13_0_s0;
    g5_p00 = x0_s0 * t13_0_s0;
    u1_2_s0 = u1_1_s0 ^ t13_0_s0;
    g4_i10 = reg(g4_p10 ^ g4_r);
    t13_0_s1 = g4_i10 ^ g4_p11;
    g5_p01 = x0_s0 * t13_0_s1;
    g5_p11 = x0_s1 * t13_0_s1;
    u1_2_s1 = u1_1_s1 ^ t13_0_s1;
    g5_i01 = reg(g5_p01 ^ g5_r);
    t013_0_s0 = g5_i01 ^ g5_p00;
    u1_3_s0 = u1_2_s0 ^ t013_0_s0;
    u3_4_s0 = u3_3_s0 ^ t013_0_s0;
    g5_i10 = reg(g5_p10 ^ g5_r);
    t013_0_s1 = g5_i10 ^ g5_p11;
    u1_3_s1 = u1_2_s1 ^ t013_0_s1;
    u3_4_s1 = u3_3_s1 ^ t013_0_s1;
    g6_i01 = reg(g6_p01 ^ g6_r);
    t23_0_s0 = g6_i01 ^ g6_p00;
    g7_p10 = x0_s1 * t23_0_s0;
    g7_p00 = x0_s0 * t23_0_s0;
    u1_4_s0 = u1_3_s0 ^ t23_0_s0;
    g6_i10 = reg(g6_p10 ^ g6_r);
    t23_0_s1 = g6_i10 ^ g6_p11;
    g7_p01 = x0_s0 * t23_0_s1;
    g7_p11 = x0_s1 * t23_0_s1;
    u1_4_s1 = u1_3_s1 ^ t23_0_s1;
    g7_i01 = reg(g7_p01 ^ g7_r);
    t023_0_s0 = g7_i01 ^ g7_p00;
    u1_5_s0 = u1_4_s0 ^ t023_0_s0;
    u3_5_s0 = u3_4_s0 ^ t023_0_s0;
    u3n0_s0 = ~u3_5_s0;
    g7_i10 = reg(g7_p10 ^ g7_r);
    t023_0_s1 = g7_i10 ^ g7_p11;
    u1_5_s1 = u1_4_s1 ^ t023_0_s1;
    u3_5_s1 = u3_4_s1 ^ t023_0_s1;
    g8_i01 = reg(g8_p01 ^ g8_r);
    t03_0_s0 = g8_i01 ^ g8_p00;
    u2_2_s0 = u2_1_s0 ^ t03_0_s0;
    u2_3_s0 = u2_2_s0 ^ t13_0_s0;
    u2_4_s0 = u2_3_s0 ^ t013_0_s0;
    u2_5_s0 = u2_4_s0 ^ t023_0_s0;
    u2n0_s0 = ~u2_5_s0;
    g8_i10 = reg(g8_p10 ^ g8_r);
    t03_0_s1 = g8_i10 ^ g8_p11;
    u2_2_s1 = u2_1_s1 ^ t03_0_s1;
    u2_3_s1 = u2_2_s1 ^ t13_0_s1;
    u2_4_s1 = u2_3_s1 ^ t013_0_s1;
    u2_5_s1 = u2_4_s1 ^ t023_0_s1;
    *y0_s0 = u0_2_s0;
    *y0_s1 = u0_2_s1;
    *y1_s0 = u1_5_s0;
    *y1_s1 = u1_5_s1;
    *y2_s0 = u2n0_s0;
    *y2_s1 = u2_5_s1;
    *y3_s0 = u3n0_s0;
    *y3_s1 = u3_5_s1;
    return 0;
}
