int present_sbox(bool x0_s0, bool x0_s1, bool x1_s0, bool x1_s1, bool x2_s0, bool x2_s1, bool x3_s0, bool x3_s1, bool g1_r, bool g1_rp, bool g1_r2, bool g1_r3, bool g1_r4, bool g1_r5, bool g2_r, bool g2_rp, bool g2_r2, bool g2_r3, bool g2_r4, bool g2_r5, bool g3_r, bool g3_rp, bool g3_r2, bool g3_r3, bool g3_r4, bool g3_r5, bool g4_r, bool g4_rp, bool g4_r2, bool g4_r3, bool g4_r4, bool g4_r5, bool g5_r, bool g5_rp, bool g5_r2, bool g5_r3, bool g5_r4, bool g5_r5, bool g6_r, bool g6_rp, bool g6_r2, bool g6_r3, bool g6_r4, bool g6_r5, bool g7_r, bool g7_rp, bool g7_r2, bool g7_r3, bool g7_r4, bool g7_r5, bool g8_r, bool g8_rp, bool g8_r2, bool g8_r3, bool g8_r4, bool g8_r5, bool *y0_s0, bool *y0_s1, bool *y1_s0, bool *y1_s1, bool *y2_s0, bool *y2_s1, bool *y3_s0, bool *y3_s1)
{
    u3_0_s0 = x0_s0 ^ x1_s0;
    u3_0_s1 = x0_s1 ^ x1_s1;
    u0_0_s0 = x0_s0 ^ x2_s0;
    u0_0_s1 = x0_s1 ^ x2_s1;
    g1_ma0 = reg(x0_s0 ^ g1_r);
    g1_ma1 = reg(x0_s1 ^ g1_r);
    g1_mb0 = x1_s0 ^ g1_rp;
    g1_q00 = g1_ma0 * g1_mb0;
    g1_q10 = g1_ma1 * g1_mb0;
    g1_mb1 = x1_s1 ^ g1_rp;
    g1_q01 = g1_ma0 * g1_mb1;
    g1_q11 = g1_ma1 * g1_mb1;
    g1_k00 = reg(g1_q00 ^ g1_r2);
    g1_k01 = reg(g1_q01 ^ g1_r3);
    g1_x0 = g1_k00 ^ g1_k01;
    g1_e0 = g1_r2 ^ g1_r3;
    g1_k10 = reg(g1_q10 ^ g1_r4);
    g1_x1 = g1_x0 ^ g1_k10;
    g1_e1 = g1_e0 ^ g1_r4;
    g1_k11 = reg(g1_q11 ^ g1_r5);
    t01_0_s0 = g1_x1 ^ g1_k11;
    u2_0_s0 = t01_0_s0 ^ x2_s0;
    u2_1_s0 = u2_0_s0 ^ x3_s0;
    t01_0_s1 = reg(g1_e1 ^ g1_r5);
    u2_0_s1 = t01_0_s1 ^ x2_s1;
    u2_1_s1 = u2_0_s1 ^ x3_s1;
    g2_ma0 = reg(x1_s0 ^ g2_r);
    g2_ma1 = reg(x1_s1 ^ g2_r);
    g2_mb0 = x2_s0 ^ g2_rp;
    g2_q00 = g2_ma0 * g2_mb0;
    g2_q10 = g2_ma1 * g2_mb0;
    g2_mb1 = x2_s1 ^ g2_rp;
    g2_q01 = g2_ma0 * g2_mb1;
    g2_q11 = g2_ma1 * g2_mb1;
    g2_k00 = reg(g2_q00 ^ g2_r2);
    g2_k01 = reg(g2_q01 ^ g2_r3);
    g2_x0 = g2_k00 ^ g2_k01;
    g2_e0 = g2_r2 ^ g2_r3;
    g2_k10 = reg(g2_q10 ^ g2_r4);
    g2_x1 = g2_x0 ^ g2_k10;
    g2_e1 = g2_e0 ^ g2_r4;
    g2_k11 = reg(g2_q11 ^ g2_r5);
    t12_0_s0 = g2_x1 ^ g2_k11;
    u3_1_s0 = u3_0_s0 ^ t12_0_s0;
    u0_1_s0 = u0_0_s0 ^ t12_0_s0;
    u0_2_s0 = u0_1_s0 ^ x3_s0;
    t12_0_s1 = reg(g2_e1 ^ g2_r5);
    u3_1_s1 = u3_0_s1 ^ t12_0_s1;
    u0_1_s1 = u0_0_s1 ^ t12_0_s1;
    u0_2_s1 = u0_1_s1 ^ x3_s1;
    g3_ma0 = reg(x0_s0 ^ g3_r);
    g3_ma1 = reg(x0_s1 ^ g3_r);
    g3_mb0 = t12_0_s0 ^ g3_rp;
    g3_q00 = g3_ma0 * g3_mb0;
    g3_q10 = g3_ma1 * g3_mb0;
    g3_mb1 = t12_0_s1 ^ g3_rp;
    g3_q01 = g3_ma0 * g3_mb1;
    g3_q11 = g3_ma1 * g3_mb1;
    g3_k00 = reg(g3_q00 ^ g3_r2);
    g3_k01 = reg(g3_q01 ^ g3_r3);
    g3_x0 = g3_k00 ^ g3_k01;
    g3_e0 = g3_r2 ^ g3_r3;
    g3_k10 = reg(g3_q10 ^ g3_r4);
    g3_x1 = g3_x0 ^ g3_k10;
    g3_e1 = g3_e0 ^ g3_r4;
    g3_k11 = reg(g3_q11 ^ g3_r5);
    t012_0_s0 = g3_x1 ^ g3_k11;
    u1_0_s0 = x1_s0 ^ t012_0_s0;
    u1_1_s0 = u1_0_s0 ^ x3_s0;
    u3_2_s0 = u3_1_s0 ^ t012_0_s0;
    u3_3_s0 = u3_2_s0 ^ x3_s0;
    t012_0_s1 = reg(g3_e1 ^ g3_r5);
    u1_0_s1 = x1_s1 ^ t012_0_s1;
    u1_1_s1 = u1_0_s1 ^ x3_s1;
    u3_2_s1 = u3_1_s1 ^ t012_0_s1;
    u3_3_s1 = u3_2_s1 ^ x3_s1;
    g4_ma0 = reg(x1_s0 ^ g4_r);
    g4_ma1 = reg(x1_s1 ^ g4_r);
    g4_mb0 = x3_s0 ^ g4_rp;
    g4_q00 = g4_ma0 * g4_mb0;
    g4_q10 = g4_ma1 * g4_mb0;
    g4_mb1 = x3_s1 ^ g4_rp;
    g4_q01 = g4_ma0 * g4_mb1;
    g4_q11 = g4_ma1 * g4_mb1;
    g4_k00 = reg(g4_q00 ^ g4_r2);
    g4_k01 = reg(g4_q01 ^ g4_r3);
    g4_x0 = g4_k00 ^ g4_k01;
    g4_e0 = g4_r2 ^ g4_r3;
    g4_k10 = reg(g4_q10 ^ g4_r4);
    g4_x1 = g4_x0 ^ g4_k10;
    g4_e1 = g4_e0 ^ g4_r4;
    g4_k11 = reg(g4_q11 ^ g4_r5);
    t13_0_s0 = g4_x1 ^ g4_k11;
    u1_2_s0 = u1_1_s0 ^ t13_0_s0;
    t13_0_s1 = reg(g4_e1 ^ g4_r5);
    u1_2_s1 = u1_1_s1 ^ t13_0_s1;
    g5_ma0 = reg(x0_s0 ^ g5_r);
    g5_ma1 = reg(x0_s1 ^ g5_r);
    g5_mb0 = t13_0_s0 ^ g5_rp;
    g5_q00 = g5_ma0 * g5_mb0;
    g5_q10 = g5_ma1 * g5_mb0;
    g5_mb1 = t13_0_s1 ^ g5_rp;
    g5_q01 = g5_ma0 * g5_mb1;
    g5_q11 = g5_ma1 * g5_mb1;
    g5_k00 = reg(g5_q00 ^ g5_r2);
    g5_k01 = reg(g5_q01 ^ g5_r3);
    g5_x0 = g5_k00 ^ g5_k01;
    g5_e0 = g5_r2 ^ g5_r3;
    g5_k10 = reg(g5_q10 ^ g5_r4);
    g5_x1 = g5_x0 ^ g5_k10;
    g5_e1 = g5_e0 ^ g5_r4;
    g5_k11 = reg(g5_q11 ^ g5_r5);
    t013_0_s0 = g5_x1 ^ g5_k11;
    u1_3_s0 = u1_2_s0 ^ t013_0_s0;
    u3_4_s0 = u3_3_s0 ^ t013_0_s0;
    t013_0_s1 = reg(g5_e1 ^ g5_r5);
    u1_3_s1 = u1_2_s1 ^ t013_0_s1;
    u3_4_s1 = u3_3_s1 ^ t013_0_s1;
    g6_ma0 = reg(x2_s0 ^ g6_r);
    g6_ma1 = reg(x2_s1 ^ g6_r);
    g6_mb0 = x3_s0 ^ g6_rp;
    g6_q00 = g6_ma0 * g6_mb0;
    g6_q10 = g6_ma1 * g6_mb0;
    g6_mb1 = x3_s1 ^ g6_rp;
    g6_q01 = g6_ma0 * g6_mb1;
    g6_q11 = g6_ma1 * g6_mb1;
    g6_k00 = reg(g6_q00 ^ g6_r2);
    g6_k01 = reg(g6_q01 ^ g6_r3);
    g6_x0 = g6_k00 ^ g6_k01;
    g6_e0 = g6_r2 ^ g6_r3;
    g6_k10 = reg(g6_q10 ^ g6_r4);
    g6_x1 = g6_x0 ^ g6_k10;
    g6_e1 = g6_e0 ^ g6_r4;
    g6_k11 = reg(g6_q11 ^ g6_r5);
    t23_0_s0 = g6_x1 ^ g6_k11;
    u1_4_s0 = u1_3_s0 ^ t23_0_s0;
    t23_0_s1 = reg(g6_e1 ^ g6_r5);
    u1_4_s1 = u1_3_s1 ^ t23_0_s1;
    g7_ma0 = reg(x0_s0 ^ g7_r);
    g7_ma1 = reg(x0_s1 ^ g7_r);
    g7_mb0 = t23_0_s0 ^ g7_rp;
    g7_q00 = g7_ma0 * g7_mb0;
    g7_q10 = g7_ma1 * g7_mb0;
    g7_mb1 = t23_0_s1 ^ g7_rp;
    g7_q01 = g7_ma0 * g7_mb1;
    g7_q11 = g7_ma1 * g7_mb1;
    g7_k00 = reg(g7_q00 ^ g7_r2);
    g7_k01 = reg(g7_q01 ^ g7_r3);
    g7_x0 = g7_k00 ^ g7_k01;
    g7_e0 = g7_r2 ^ g7_r3;
    g7_k10 = reg(g7_q10 ^ g7_r4);
    g7_x1 = g7_x0 ^ g7_k10;
    g7_e1 = g7_e0 ^ g7_r4;
    g7_k11 = reg(g7_q11 ^ g7_r5);
    t023_0_s0 = g7_x1 ^ g7_k11;
    u1_5_s0 = u1_4_s0 ^ t023_0_s0;
    u3_5_s0 = u3_4_s0 ^ t023_0_s0;
    u3n0_s0 = ~u3_5_s0;
    t023_0_s1 = reg(g7_e1 ^ g7_r5);
    u1_5_s1 = u1_4_s1 ^ t023_0_s1;
    u3_5_s1 = u3_4_s1 ^ t023_0_s1;
    g8_ma0 = reg(x0_s0 ^ g8_r);
    g8_ma1 = reg(x0_s1 ^ g8_r);
    g8_mb0 = x3_s0 ^ g8_rp;
    g8_q00 = g8_ma0 * g8_mb0;
    g8_q10 = g8_ma1 * g8_mb0;
    g8_mb1 = x3_s1 ^ g8_rp;
    g8_q01 = g8_ma0 * g8_mb1;
    g8_q11 = g8_ma1 * g8_mb1;
    g8_k00 = reg(g8_q00 ^ g8_r2);
    g8_k01 = reg(g8_q01 ^ g8_r3);
    g8_x0 = g8_k00 ^ g8_k01;
    g8_e0 = g8_r2 ^ g8_r3;
    g8_k10 = reg(g8_q10 ^ g8_r4);
    g8_x1 = g8_x0 ^ g8_k10;
    g8_e1 = g8_e0 ^ g8_r4;
    g8_k11 = reg(g8_q11 ^ g8_r5);
    t03_0_s0 = g8_x1 ^ g8_k11;
    u2_2_s0 = u2_1_s0 ^ t03_0_s0;
    u2_3_s0 = u2_2_s0 ^ t13_0_s0;
    u2_4_s0 = u2_3_s0 ^ t013_0_s0;
    u2_5_s0 = u2_4_s0 ^ t023_0_s0;
    u2n0_s0 = ~u2_5_s0;
    t03_0_s1 = reg(g8_e1 ^ g8_r5);
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
