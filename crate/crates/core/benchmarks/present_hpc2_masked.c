int present_sbox(bool x0_s0, bool x0_s1, bool x1_s0, bool x1_s1, bool x2_s0, bool x2_s1, bool x3_s0, bool x3_s1, bool g1_r, bool g2_r, bool g3_r, bool g4_r, bool g5_r, bool g6_r, bool g7_r, bool g8_r, bool *y0_s0, bool *y0_s1, bool *y1_s0, bool *y1_s1, bool *y2_s0, bool *y2_s1, bool *y3_s0, bool *y3_s1)
{
    g1_na0 = ~x0_s0;
    g3_na0 = ~x0_s0;
    g5_na0 = ~x0_s0;
    g7_na0 = ~x0_s0;
    g8_na0 = ~x0_s0;
    g1_na1 = ~x0_s1;
    g3_na1 = ~x0_s1;
    g5_na1 = ~x0_s1;
    g7_na1 = ~x0_s1;
    g8_na1 = ~x0_s1;
    g1_p00 = x0_s0 * x1_s0;
    u3_0_s0 = x0_s0 ^ x1_s0;
    g2_na0 = ~x1_s0;
    g4_na0 = ~x1_s0;
    g1_p11 = x0_s1 * x1_s1;
    u3_0_s1 = x0_s1 ^ x1_s1;
    g2_na1 = ~x1_s1;
    g4_na1 = ~x1_s1;
    g2_p00 = x1_s0 * x2_s0;
    u0_0_s0 = x0_s0 ^ x2_s0;
    g6_na0 = ~x2_s0;
    g2_p11 = x1_s1 * x2_s1;
    u0_0_s1 = x0_s1 ^ x2_s1;
    g6_na1 = ~x2_s1;
    g4_p00 = x1_s0 * x3_s0;
    g6_p00 = x2_s0 * x3_s0;
    g8_p00 = x0_s0 * x3_s0;
    g4_p11 = x1_s1 * x3_s1;
    g6_p11 = x2_s1 * x3_s1;
    g8_p11 = x0_s1 * x3_s1;
    g1_u0 = reg(x1_s1 ^ g1_r);
    g1_t0 = reg(x0_s0 * g1_u0);
    g1_u1 = reg(x1_s0 ^ g1_r);
    g1_t1 = reg(x0_s1 * g1_u1);
    g1_v0 = reg(g1_na0 * g1_r);
    g1_s0 = g1_v0 ^ g1_t0;
    t01_0_s0 = g1_p00 ^ g1_s0;
    u2_0_s0 = t01_0_s0 ^ x2_s0;
    u2_1_s0 = u2_0_s0 ^ x3_s0;
    g1_v1 = reg(g1_na1 * g1_r);
    g1_s1 = g1_v1 ^ g1_t1;
    t01_0_s1 = g1_p11 ^ g1_s1;
    u2_0_s1 = t01_0_s1 ^ x2_s1;
    u2_1_s1 = u2_0_s1 ^ x3_s1;
    g2_u0 = reg(x2_s1 ^ g2_r);
    g2_t0 = reg(x1_s0 * g2_u0);
    g2_u1 = reg(x2_s0 ^ g2_r);
    g2_t1 = reg(x1_s1 * g2_u1);
    g2_v0 = reg(g2_na0 * g2_r);
    g2_s0 = g2_v0 ^ g2_t0;
    t12_0_s0 = g2_p00 ^ g2_s0;
    g3_p00 = x0_s0 * t12_0_s0;
    u3_1_s0 = u3_0_s0 ^ t12_0_s0;
    u0_1_s0 = u0_0_s0 ^ t12_0_s0;
    u0_2_s0 = u0_1_s0 ^ x3_s0;
    g2_v1 = reg(g2_na1 * g2_r);
    g2_s1 = g2_v1 ^ g2_t1;
    t12_0_s1 = g2_p11 ^ g2_s1;
    g3_p11 = x0_s1 * t12_0_s1;
    u3_1_s1 = u3_0_s1 ^ t12_0_s1;
    u0_1_s1 = u0_0_s1 ^ t12_0_s1;
    u0_2_s1 = u0_1_s1 ^ x3_s1;
    g3_u0 = reg(t12_0_s1 ^ g3_r);
    g3_t0 = reg(x0_s0 * g3_u0);
    g3_u1 = reg(t12_0_s0 ^ g3_r);
    g3_t1 = reg(x0_s1 * g3_u1);
    g3_v0 = reg(g3_na0 * g3_r);
    g3_s0 = g3_v0 ^ g3_t0;
    t012_0_s0 = g3_p00 ^ g3_s0;
    u1_0_s0 = x1_s0 ^ t012_0_s0;
    u1_1_s0 = u1_0_s0 ^ x3_s0;
    u3_2_s0 = u3_1_s0 ^ t012_0_s0;
    u3_3_s0 = u3_2_s0 ^ x3_s0;
    g3_v1 = reg(g3_na1 * g3_r);
    g3_s1 = g3_v1 ^ g3_t1;
    t012_0_s1 = g3_p11 ^ g3_s1;
    u1_0_s1 = x1_s1 ^ t012_0_s1;
    u1_1_s1 = u1_0_s1 ^ x3_s1;
    u3_2_s1 = u3_1_s1 ^ t012_0_s1;
    u3_3_s1 = u3_2_s1 ^ x3_s1;
    g4_u0 = reg(x3_s1 ^ g4_r);
    g4_t0 = reg(x1_s0 * g4_u0);
    g4_u1 = reg(x3_s0 ^ g4_r);
    g4_t1 = reg(x1_s1 * g4_u1);
    g4_v0 = reg(g4_na0 * g4_r);
    g4_s0 = g4_v0 ^ g4_t0;
    t13_0_s0 = g4_p00 ^ g4_s0;
    g5_p00 = x0_s0 * t13_0_s0;
    u1_2_s0 = u1_1_s0 ^ t13_0_s0;
    g4_v1 = reg(g4_na1 * g4_r);
    g4_s1 = g4_v1 ^ g4_t1;
    t13_0_s1 = g4_p11 ^ g4_s1;
    g5_p11 = x0_s1 * t13_0_s1;
    u1_2_s1 = u1_1_s1 ^ t13_0_s1;
    g5_u0 = reg(t13_0_s1 ^ g5_r);
    g5_t0 = reg(x0_s0 * g5_u0);
    g5_u1 = reg(t13_0_s0 ^ g5_r);
    g5_t1 = reg(x0_s1 * g5_u1);
    g5_v0 = reg(g5_na0 * g5_r);
    g5_s0 = g5_v0 ^ g5_t0;
    t013_0_s0 = g5_p00 ^ g5_s0;
    u1_3_s0 = u1_2_s0 ^ t013_0_s0;
    u3_4_s0 = u3_3_s0 ^ t013_0_s0;
    g5_v1 = reg(g5_na1 * g5_r);
    g5_s1 = g5_v1 ^ g5_t1;
    t013_0_s1 = g5_p11 ^ g5_s1;
    u1_3_s1 = u1_2_s1 ^ t013_0_s1;
    u3_4_s1 = u3_3_s1 ^ t013_0_s1;
    g6_u0 = reg(x3_s1 ^ g6_r);
    g6_t0 = reg(x2_s0 * g6_u0);
    g6_u1 = reg(x3_s0 ^ g6_r);
    g6_t1 = reg(x2_s1 * g6_u1);
    g6_v0 = reg(g6_na0 * g6_r);
    g6_s0 = g6_v0 ^ g6_t0;
    t23_0_s0 = g6_p00 ^ g6_s0;
    g7_p00 = x0_s0 * t23_0_s0;
    u1_4_s0 = u1_3_s0 ^ t23_0_s0;
    g6_v1 = reg(g6_na1 * g6_r);
    g6_s1 = g6_v1 ^ g6_t1;
    t23_0_s1 = g6_p11 ^ g6_s1;
    g7_p11 = x0_s1 * t23_0_s1;
    u1_4_s1 = u1_3_s1 ^ t23_0_s1;
    g7_u0 = reg(t23_0_s1 ^ g7_r);
    g7_t0 = reg(x0_s0 * g7_u0);
    g7_u1 = reg(t23_0_s0 ^ g7_r);
    g7_t1 = reg(x0_s1 * g7_u1);
    g7_v0 = reg(g7_na0 * g7_r);
    g7_s0 = g7_v0 ^ g7_t0;
    t023_0_s0 = g7_p00 ^ g7_s0;
    u1_5_s0 = u1_4_s0 ^ t023_0_s0;
    u3_5_s0 = u3_4_s0 ^ t023_0_s0;
    u3n0_s0 = ~u3_5_s0;
    g7_v1 = reg(g7_na1 * g7_r);
    g7_s1 = g7_v1 ^ g7_t1;
    t023_0_s1 = g7_p11 ^ g7_s1;
    u1_5_s1 = u1_4_s1 ^ t023_0_s1;
    u3_5_s1 = u3_4_s1 ^ t023_0_s1;
    g8_u0 = reg(x3_s1 ^ g8_r);
    g8_t0 = reg(x0_s0 * g8_u0);
    g8_u1 = reg(x3_s0 ^ g8_r);
    g8_t1 = reg(x0_s1 * g8_u1);
    g8_v0 = reg(g8_na0 * g8_r);
    g8_s0 = g8_v0 ^ g8_t0;
    t03_0_s0 = g8_p00 ^ g8_s0;
    u2_2_s0 = u2_1_s0 ^ t03_0_s0;
    u2_3_s0 = u2_2_s0 ^ t13_0_s0;
    u2_4_s0 = u2_3_s0 ^ t013_0_s0;
    u2_5_s0 = u2_4_s0 ^ t023_0_s0;
    u2n0_s0 = ~u2_5_s0;
    g8_v1 = reg(g8_na1 * g8_r);
    g8_s1 = g8_v1 ^ g8_t1;
    t03_0_s1 = g8_p11 ^ g8_s1;
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
