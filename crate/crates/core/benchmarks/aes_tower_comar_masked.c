int aes_sbox(bool x0_s0, bool x0_s1, bool x1_s0, bool x1_s1, bool x2_s0, bool x2_s1, bool x3_s0, bool x3_s1, bool x4_s0, bool x4_s1, bool x5_s0, bool x5_s1, bool x6_s0, bool x6_s1, bool x7_s0, bool x7_s1, bool g1_r, bool g1_rp, bool g1_r2, bool g1_r3, bool g1_r4, bool g1_r5, bool g2_r, bool g2_rp, bool g2_r2, bool g2_r3, bool g2_r4, bool g2_r5, bool g3_r, bool g3_rp, bool g3_r2, bool g3_r3, bool g3_r4, bool g3_r5, bool g4_r, bool g4_rp, bool g4_r2, bool g4_r3, bool g4_r4, bool g4_r5, bool g5_r, bool g5_rp, bool g5_r2, bool g5_r3, bool g5_r4, bool g5_r5, bool g6_r, bool g6_rp, bool g6_r2, bool g6_r3, bool g6_r4, bool g6_r5, bool g7_r, bool g7_rp, bool g7_r2, bool g7_r3, bool g7_r4, bool g7_r5, bool g8_r, bool g8_rp, bool g8_r2, bool g8_r3, bool g8_r4, bool g8_r5, bool g9_r, bool g9_rp, bool g9_r2, bool g9_r3, bool g9_r4, bool g9_r5, bool g10_r, bool g10_rp, bool g10_r2, bool g10_r3, bool g10_r4, bool g10_r5, bool g11_r, bool g11_rp, bool g11_r2, bool g11_r3, bool g11_r4, bool g11_r5, bool g12_r, bool g12_rp, bool g12_r2, bool g12_r3, bool g12_r4, bool g12_r5, bool g13_r, bool g13_rp, bool g13_r2, bool g13_r3, bool g13_r4, bool g13_r5, bool g14_r, bool g14_rp, bool g14_r2, bool g14_r3, bool g14_r4, bool g14_r5, bool g15_r, bool g15_rp, bool g15_r2, bool g15_r3, bool g15_r4, bool g15_r5, bool g16_r, bool g16_rp, bool g16_r2, bool g16_r3, bool g16_r4, bool g16_r5, bool g17_r, bool g17_rp, bool g17_r2, bool g17_r3, bool g17_r4, bool g17_r5, bool g18_r, bool g18_rp, bool g18_r2, bool g18_r3, bool g18_r4, bool g18_r5, bool g19_r, bool g19_rp, bool g19_r2, bool g19_r3, bool g19_r4, bool g19_r5, bool g20_r, bool g20_rp, bool g20_r2, bool g20_r3, bool g20_r4, bool g20_r5, bool g21_r, bool g21_rp, bool g21_r2, bool g21_r3, bool g21_r4, bool g21_r5, bool g22_r, bool g22_rp, bool g22_r2, bool g22_r3, bool g22_r4, bool g22_r5, bool g23_r, bool g23_rp, bool g23_r2, bool g23_r3, bool g23_r4, bool g23_r5, bool g24_r, bool g24_rp, bool g24_r2, bool g24_r3, bool g24_r4, bool g24_r5, bool g25_r, bool g25_rp, bool g25_r2, bool g25_r3, bool g25_r4, bool g25_r5, bool g26_r, bool g26_rp, bool g26_r2, bool g26_r3, bool g26_r4, bool g26_r5, bool g27_r, bool g27_rp, bool g27_r2, bool g27_r3, bool g27_r4, bool g27_r5, bool g28_r, bool g28_rp, bool g28_r2, bool g28_r3, bool g28_r4, bool g28_r5, bool g29_r, bool g29_rp, bool g29_r2, bool g29_r3, bool g29_r4, bool g29_r5, bool g30_r, bool g30_rp, bool g30_r2, bool g30_r3, bool g30_r4, bool g30_r5, bool g31_r, bool g31_rp, bool g31_r2, bool g31_r3, bool g31_r4, bool g31_r5, bool g32_r, bool g32_rp, bool g32_r2, bool g32_r3, bool g32_r4, bool g32_r5, bool g33_r, bool g33_rp, bool g33_r2, bool g33_r3, bool g33_r4, bool g33_r5, bool g34_r, bool g34_rp, bool g34_r2, bool g34_r3, bool g34_r4, bool g34_r5, bool g35_r, bool g35_rp, bool g35_r2, bool g35_r3, bool g35_r4, bool g35_r5, bool g36_r, bool g36_rp, bool g36_r2, bool g36_r3, bool g36_r4, bool g36_r5, bool *y0_s0, bool *y0_s1, bool *y1_s0, bool *y1_s1, bool *y2_s0, bool *y2_s1, bool *y3_s0, bool *y3_s1, bool *y4_s0, bool *y4_s1, bool *y5_s0, bool *y5_s1, bool *y6_s0, bool *y6_s1, bool *y7_s0, bool *y7_s1)
{
    b0_0_s0 = x0_s0 ^ x1_s0;
    b0_0_s1 = x0_s1 ^ x1_s1;
    b6_0_s0 = x1_s0 ^ x2_s0;
    b6_0_s1 = x1_s1 ^ x2_s1;
    b2_0_s0 = x2_s0 ^ x3_s0;
    b5_0_s0 = x2_s0 ^ x3_s0;
    b6_1_s0 = b6_0_s0 ^ x3_s0;
    b2_0_s1 = x2_s1 ^ x3_s1;
    b5_0_s1 = x2_s1 ^ x3_s1;
    b6_1_s1 = b6_0_s1 ^ x3_s1;
    b1_0_s0 = x2_s0 ^ x4_s0;
    b2_1_s0 = b2_0_s0 ^ x4_s0;
    b6_2_s0 = b6_1_s0 ^ x4_s0;
    b1_0_s1 = x2_s1 ^ x4_s1;
    b2_1_s1 = b2_0_s1 ^ x4_s1;
    b6_2_s1 = b6_1_s1 ^ x4_s1;
    b1_1_s0 = b1_0_s0 ^ x5_s0;
    s1_s0 = b1_1_s0 ^ b0_0_s0;
    q3_s0 = b1_1_s0 ^ b0_0_s0;
    a36_s0 = b5_0_s0 ^ b1_1_s0;
    b3_0_s0 = x3_s0 ^ x5_s0;
    b4_0_s0 = x4_s0 ^ x5_s0;
    b1_1_s1 = b1_0_s1 ^ x5_s1;
    s1_s1 = b1_1_s1 ^ b0_0_s1;
    q3_s1 = b1_1_s1 ^ b0_0_s1;
    a36_s1 = b5_0_s1 ^ b1_1_s1;
    b3_0_s1 = x3_s1 ^ x5_s1;
    b4_0_s1 = x4_s1 ^ x5_s1;
    b3_1_s0 = b3_0_s0 ^ x6_s0;
    a4_s0 = b3_1_s0 ^ b1_1_s0;
    a15_s0 = b3_1_s0 ^ q3_s0;
    b4_1_s0 = b4_0_s0 ^ x6_s0;
    q1_s0 = b5_0_s0 ^ b4_1_s0;
    s0_s0 = b5_0_s0 ^ b4_1_s0;
    s12_s0 = b5_0_s0 ^ b4_1_s0;
    a37_s0 = b4_1_s0 ^ b0_0_s0;
    s18_s0 = a36_s0 ^ a37_s0;
    b6_3_s0 = b6_2_s0 ^ x6_s0;
    b3_1_s1 = b3_0_s1 ^ x6_s1;
    a4_s1 = b3_1_s1 ^ b1_1_s1;
    a15_s1 = b3_1_s1 ^ q3_s1;
    b4_1_s1 = b4_0_s1 ^ x6_s1;
    q1_s1 = b5_0_s1 ^ b4_1_s1;
    s0_s1 = b5_0_s1 ^ b4_1_s1;
    s12_s1 = b5_0_s1 ^ b4_1_s1;
    a37_s1 = b4_1_s1 ^ b0_0_s1;
    s18_s1 = a36_s1 ^ a37_s1;
    b6_3_s1 = b6_2_s1 ^ x6_s1;
    b2_2_s0 = b2_1_s0 ^ x7_s0;
    a5_s0 = b2_2_s0 ^ b0_0_s0;
    s3_s0 = a4_s0 ^ a5_s0;
    s5_s0 = b3_1_s0 ^ b2_2_s0;
    q2_s0 = b3_1_s0 ^ b2_2_s0;
    k2_s0 = b3_1_s0 ^ q2_s0;
    a14_s0 = k2_s0 ^ b1_1_s0;
    b6_4_s0 = b6_3_s0 ^ x7_s0;
    a3_s0 = b6_4_s0 ^ b4_1_s0;
    a27_s0 = b6_4_s0 ^ b4_1_s0;
    a35_s0 = b6_4_s0 ^ b2_2_s0;
    a39_s0 = a35_s0 ^ a37_s0;
    b7_0_s0 = x5_s0 ^ x7_s0;
    q0_s0 = b7_0_s0 ^ b6_4_s0;
    k0_s0 = b7_0_s0 ^ q0_s0;
    a0_s0 = k0_s0 ^ b5_0_s0;
    l3_s0 = b7_0_s0 ^ a0_s0;
    l0_s0 = b7_0_s0 ^ q0_s0;
    l1_s0 = l0_s0 ^ a0_s0;
    l4_s0 = b7_0_s0 ^ q0_s0;
    a1_s0 = b7_0_s0 ^ q1_s0;
    l2_s0 = l1_s0 ^ a1_s0;
    a2_s0 = b7_0_s0 ^ b5_0_s0;
    s2_s0 = a2_s0 ^ a3_s0;
    s4_s0 = b7_0_s0 ^ b6_4_s0;
    a26_s0 = b7_0_s0 ^ b5_0_s0;
    s14_s0 = a26_s0 ^ a27_s0;
    s16_s0 = b7_0_s0 ^ b6_4_s0;
    a34_s0 = b7_0_s0 ^ b3_1_s0;
    a38_s0 = a34_s0 ^ a36_s0;
    s20_s0 = a38_s0 ^ a39_s0;
    s22_s0 = a34_s0 ^ a35_s0;
    b2_2_s1 = b2_1_s1 ^ x7_s1;
    a5_s1 = b2_2_s1 ^ b0_0_s1;
    s3_s1 = a4_s1 ^ a5_s1;
    s5_s1 = b3_1_s1 ^ b2_2_s1;
    q2_s1 = b3_1_s1 ^ b2_2_s1;
    k2_s1 = b3_1_s1 ^ q2_s1;
    a14_s1 = k2_s1 ^ b1_1_s1;
    b6_4_s1 = b6_3_s1 ^ x7_s1;
    a3_s1 = b6_4_s1 ^ b4_1_s1;
    a27_s1 = b6_4_s1 ^ b4_1_s1;
    a35_s1 = b6_4_s1 ^ b2_2_s1;
    a39_s1 = a35_s1 ^ a37_s1;
    b7_0_s1 = x5_s1 ^ x7_s1;
    q0_s1 = b7_0_s1 ^ b6_4_s1;
    k0_s1 = b7_0_s1 ^ q0_s1;
    a0_s1 = k0_s1 ^ b5_0_s1;
    l3_s1 = b7_0_s1 ^ a0_s1;
    l0_s1 = b7_0_s1 ^ q0_s1;
    l1_s1 = l0_s1 ^ a0_s1;
    l4_s1 = b7_0_s1 ^ q0_s1;
    a1_s1 = b7_0_s1 ^ q1_s1;
    l2_s1 = l1_s1 ^ a1_s1;
    a2_s1 = b7_0_s1 ^ b5_0_s1;
    s2_s1 = a2_s1 ^ a3_s1;
    s4_s1 = b7_0_s1 ^ b6_4_s1;
    a26_s1 = b7_0_s1 ^ b5_0_s1;
    s14_s1 = a26_s1 ^ a27_s1;
    s16_s1 = b7_0_s1 ^ b6_4_s1;
    a34_s1 = b7_0_s1 ^ b3_1_s1;
    a38_s1 = a34_s1 ^ a36_s1;
    s20_s1 = a38_s1 ^ a39_s1;
    s22_s1 = a34_s1 ^ a35_s1;
    g1_ma0 = reg(b5_0_s0 ^ g1_r);
    g1_ma1 = reg(b5_0_s1 ^ g1_r);
    g1_mb0 = b1_1_s0 ^ g1_rp;
    g1_q00 = g1_ma0 * g1_mb0;
    g1_q10 = g1_ma1 * g1_mb0;
    g1_mb1 = b1_1_s1 ^ g1_rp;
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
    p0_s0 = g1_x1 ^ g1_k11;
    p0_s1 = reg(g1_e1 ^ g1_r5);
    g2_ma0 = reg(b4_1_s0 ^ g2_r);
    g2_ma1 = reg(b4_1_s1 ^ g2_r);
    g2_mb0 = b0_0_s0 ^ g2_rp;
    g2_q00 = g2_ma0 * g2_mb0;
    g2_q10 = g2_ma1 * g2_mb0;
    g2_mb1 = b0_0_s1 ^ g2_rp;
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
    p1_s0 = g2_x1 ^ g2_k11;
    m1_s0 = p0_s0 ^ p1_s0;
    p1_s1 = reg(g2_e1 ^ g2_r5);
    m1_s1 = p0_s1 ^ p1_s1;
    g3_ma0 = reg(s0_s0 ^ g3_r);
    g3_ma1 = reg(s0_s1 ^ g3_r);
    g3_mb0 = s1_s0 ^ g3_rp;
    g3_q00 = g3_ma0 * g3_mb0;
    g3_q10 = g3_ma1 * g3_mb0;
    g3_mb1 = s1_s1 ^ g3_rp;
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
    p2_s0 = g3_x1 ^ g3_k11;
    m0_s0 = p2_s0 ^ p1_s0;
    p2_s1 = reg(g3_e1 ^ g3_r5);
    m0_s1 = p2_s1 ^ p1_s1;
    g4_ma0 = reg(a3_s0 ^ g4_r);
    g4_ma1 = reg(a3_s1 ^ g4_r);
    g4_mb0 = a5_s0 ^ g4_rp;
    g4_q00 = g4_ma0 * g4_mb0;
    g4_q10 = g4_ma1 * g4_mb0;
    g4_mb1 = a5_s1 ^ g4_rp;
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
    p4_s0 = g4_x1 ^ g4_k11;
    p4_s1 = reg(g4_e1 ^ g4_r5);
    g5_ma0 = reg(b6_4_s0 ^ g5_r);
    g5_ma1 = reg(b6_4_s1 ^ g5_r);
    g5_mb0 = b2_2_s0 ^ g5_rp;
    g5_q00 = g5_ma0 * g5_mb0;
    g5_q10 = g5_ma1 * g5_mb0;
    g5_mb1 = b2_2_s1 ^ g5_rp;
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
    p7_s0 = g5_x1 ^ g5_k11;
    p7_s1 = reg(g5_e1 ^ g5_r5);
    g6_ma0 = reg(a2_s0 ^ g6_r);
    g6_ma1 = reg(a2_s1 ^ g6_r);
    g6_mb0 = a4_s0 ^ g6_rp;
    g6_q00 = g6_ma0 * g6_mb0;
    g6_q10 = g6_ma1 * g6_mb0;
    g6_mb1 = a4_s1 ^ g6_rp;
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
    p3_s0 = g6_x1 ^ g6_k11;
    m3_s0 = p3_s0 ^ p4_s0;
    a7_s0 = m3_s0 ^ m1_s0;
    a11_s0 = l3_s0 ^ a7_s0;
    a17_s0 = a11_s0 ^ q2_s0;
    p3_s1 = reg(g6_e1 ^ g6_r5);
    m3_s1 = p3_s1 ^ p4_s1;
    a7_s1 = m3_s1 ^ m1_s1;
    a11_s1 = l3_s1 ^ a7_s1;
    a17_s1 = a11_s1 ^ q2_s1;
    g7_ma0 = reg(s2_s0 ^ g7_r);
    g7_ma1 = reg(s2_s1 ^ g7_r);
    g7_mb0 = s3_s0 ^ g7_rp;
    g7_q00 = g7_ma0 * g7_mb0;
    g7_q10 = g7_ma1 * g7_mb0;
    g7_mb1 = s3_s1 ^ g7_rp;
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
    p5_s0 = g7_x1 ^ g7_k11;
    m2_s0 = p5_s0 ^ p4_s0;
    a6_s0 = m2_s0 ^ m0_s0;
    a10_s0 = l2_s0 ^ a6_s0;
    a16_s0 = a10_s0 ^ b3_1_s0;
    q4_s0 = a16_s0 ^ a17_s0;
    k3_s0 = a16_s0 ^ q4_s0;
    s6_s0 = a16_s0 ^ a17_s0;
    s8_s0 = a16_s0 ^ a17_s0;
    p5_s1 = reg(g7_e1 ^ g7_r5);
    m2_s1 = p5_s1 ^ p4_s1;
    a6_s1 = m2_s1 ^ m0_s1;
    a10_s1 = l2_s1 ^ a6_s1;
    a16_s1 = a10_s1 ^ b3_1_s1;
    q4_s1 = a16_s1 ^ a17_s1;
    k3_s1 = a16_s1 ^ q4_s1;
    s6_s1 = a16_s1 ^ a17_s1;
    s8_s1 = a16_s1 ^ a17_s1;
    g8_ma0 = reg(b7_0_s0 ^ g8_r);
    g8_ma1 = reg(b7_0_s1 ^ g8_r);
    g8_mb0 = b3_1_s0 ^ g8_rp;
    g8_q00 = g8_ma0 * g8_mb0;
    g8_q10 = g8_ma1 * g8_mb0;
    g8_mb1 = b3_1_s1 ^ g8_rp;
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
    p6_s0 = g8_x1 ^ g8_k11;
    m5_s0 = p6_s0 ^ p7_s0;
    p6_s1 = reg(g8_e1 ^ g8_r5);
    m5_s1 = p6_s1 ^ p7_s1;
    g9_ma0 = reg(s4_s0 ^ g9_r);
    g9_ma1 = reg(s4_s1 ^ g9_r);
    g9_mb0 = s5_s0 ^ g9_rp;
    g9_q00 = g9_ma0 * g9_mb0;
    g9_q10 = g9_ma1 * g9_mb0;
    g9_mb1 = s5_s1 ^ g9_rp;
    g9_q01 = g9_ma0 * g9_mb1;
    g9_q11 = g9_ma1 * g9_mb1;
    g9_k00 = reg(g9_q00 ^ g9_r2);
    g9_k01 = reg(g9_q01 ^ g9_r3);
    g9_x0 = g9_k00 ^ g9_k01;
    g9_e0 = g9_r2 ^ g9_r3;
    g9_k10 = reg(g9_q10 ^ g9_r4);
    g9_x1 = g9_x0 ^ g9_k10;
    g9_e1 = g9_e0 ^ g9_r4;
    g9_k11 = reg(g9_q11 ^ g9_r5);
    p8_s0 = g9_x1 ^ g9_k11;
    m4_s0 = p8_s0 ^ p7_s0;
    k1_s0 = m4_s0 ^ m5_s0;
    a8_s0 = k1_s0 ^ m0_s0;
    a12_s0 = q0_s0 ^ a8_s0;
    a18_s0 = a12_s0 ^ a14_s0;
    a24_s0 = a16_s0 ^ a18_s0;
    a9_s0 = m4_s0 ^ m1_s0;
    a13_s0 = l4_s0 ^ a9_s0;
    a19_s0 = a13_s0 ^ a15_s0;
    s7_s0 = a18_s0 ^ a19_s0;
    q5_s0 = a18_s0 ^ a19_s0;
    a25_s0 = a17_s0 ^ a19_s0;
    s10_s0 = a24_s0 ^ a25_s0;
    p8_s1 = reg(g9_e1 ^ g9_r5);
    m4_s1 = p8_s1 ^ p7_s1;
    k1_s1 = m4_s1 ^ m5_s1;
    a8_s1 = k1_s1 ^ m0_s1;
    a12_s1 = q0_s1 ^ a8_s1;
    a18_s1 = a12_s1 ^ a14_s1;
    a24_s1 = a16_s1 ^ a18_s1;
    a9_s1 = m4_s1 ^ m1_s1;
    a13_s1 = l4_s1 ^ a9_s1;
    a19_s1 = a13_s1 ^ a15_s1;
    s7_s1 = a18_s1 ^ a19_s1;
    q5_s1 = a18_s1 ^ a19_s1;
    a25_s1 = a17_s1 ^ a19_s1;
    s10_s1 = a24_s1 ^ a25_s1;
    g10_ma0 = reg(a16_s0 ^ g10_r);
    g10_ma1 = reg(a16_s1 ^ g10_r);
    g10_mb0 = a18_s0 ^ g10_rp;
    g10_q00 = g10_ma0 * g10_mb0;
    g10_q10 = g10_ma1 * g10_mb0;
    g10_mb1 = a18_s1 ^ g10_rp;
    g10_q01 = g10_ma0 * g10_mb1;
    g10_q11 = g10_ma1 * g10_mb1;
    g10_k00 = reg(g10_q00 ^ g10_r2);
    g10_k01 = reg(g10_q01 ^ g10_r3);
    g10_x0 = g10_k00 ^ g10_k01;
    g10_e0 = g10_r2 ^ g10_r3;
    g10_k10 = reg(g10_q10 ^ g10_r4);
    g10_x1 = g10_x0 ^ g10_k10;
    g10_e1 = g10_e0 ^ g10_r4;
    g10_k11 = reg(g10_q11 ^ g10_r5);
    p9_s0 = g10_x1 ^ g10_k11;
    p9_s1 = reg(g10_e1 ^ g10_r5);
    g11_ma0 = reg(a17_s0 ^ g11_r);
    g11_ma1 = reg(a17_s1 ^ g11_r);
    g11_mb0 = a19_s0 ^ g11_rp;
    g11_q00 = g11_ma0 * g11_mb0;
    g11_q10 = g11_ma1 * g11_mb0;
    g11_mb1 = a19_s1 ^ g11_rp;
    g11_q01 = g11_ma0 * g11_mb1;
    g11_q11 = g11_ma1 * g11_mb1;
    g11_k00 = reg(g11_q00 ^ g11_r2);
    g11_k01 = reg(g11_q01 ^ g11_r3);
    g11_x0 = g11_k00 ^ g11_k01;
    g11_e0 = g11_r2 ^ g11_r3;
    g11_k10 = reg(g11_q10 ^ g11_r4);
    g11_x1 = g11_x0 ^ g11_k10;
    g11_e1 = g11_e0 ^ g11_r4;
    g11_k11 = reg(g11_q11 ^ g11_r5);
    p10_s0 = g11_x1 ^ g11_k11;
    m7_s0 = p9_s0 ^ p10_s0;
    a21_s0 = a16_s0 ^ m7_s0;
    a23_s0 = a21_s0 ^ q5_s0;
    p10_s1 = reg(g11_e1 ^ g11_r5);
    m7_s1 = p9_s1 ^ p10_s1;
    a21_s1 = a16_s1 ^ m7_s1;
    a23_s1 = a21_s1 ^ q5_s1;
    g12_ma0 = reg(s6_s0 ^ g12_r);
    g12_ma1 = reg(s6_s1 ^ g12_r);
    g12_mb0 = s7_s0 ^ g12_rp;
    g12_q00 = g12_ma0 * g12_mb0;
    g12_q10 = g12_ma1 * g12_mb0;
    g12_mb1 = s7_s1 ^ g12_rp;
    g12_q01 = g12_ma0 * g12_mb1;
    g12_q11 = g12_ma1 * g12_mb1;
    g12_k00 = reg(g12_q00 ^ g12_r2);
    g12_k01 = reg(g12_q01 ^ g12_r3);
    g12_x0 = g12_k00 ^ g12_k01;
    g12_e0 = g12_r2 ^ g12_r3;
    g12_k10 = reg(g12_q10 ^ g12_r4);
    g12_x1 = g12_x0 ^ g12_k10;
    g12_e1 = g12_e0 ^ g12_r4;
    g12_k11 = reg(g12_q11 ^ g12_r5);
    p11_s0 = g12_x1 ^ g12_k11;
    m6_s0 = p11_s0 ^ p10_s0;
    a20_s0 = k3_s0 ^ m6_s0;
    a22_s0 = a20_s0 ^ a18_s0;
    q6_s0 = a22_s0 ^ a23_s0;
    s9_s0 = a22_s0 ^ q6_s0;
    s11_s0 = a22_s0 ^ q6_s0;
    p11_s1 = reg(g12_e1 ^ g12_r5);
    m6_s1 = p11_s1 ^ p10_s1;
    a20_s1 = k3_s1 ^ m6_s1;
    a22_s1 = a20_s1 ^ a18_s1;
    q6_s1 = a22_s1 ^ a23_s1;
    s9_s1 = a22_s1 ^ q6_s1;
    s11_s1 = a22_s1 ^ q6_s1;
    g13_ma0 = reg(a16_s0 ^ g13_r);
    g13_ma1 = reg(a16_s1 ^ g13_r);
    g13_mb0 = a22_s0 ^ g13_rp;
    g13_q00 = g13_ma0 * g13_mb0;
    g13_q10 = g13_ma1 * g13_mb0;
    g13_mb1 = a22_s1 ^ g13_rp;
    g13_q01 = g13_ma0 * g13_mb1;
    g13_q11 = g13_ma1 * g13_mb1;
    g13_k00 = reg(g13_q00 ^ g13_r2);
    g13_k01 = reg(g13_q01 ^ g13_r3);
    g13_x0 = g13_k00 ^ g13_k01;
    g13_e0 = g13_r2 ^ g13_r3;
    g13_k10 = reg(g13_q10 ^ g13_r4);
    g13_x1 = g13_x0 ^ g13_k10;
    g13_e1 = g13_e0 ^ g13_r4;
    g13_k11 = reg(g13_q11 ^ g13_r5);
    p12_s0 = g13_x1 ^ g13_k11;
    p12_s1 = reg(g13_e1 ^ g13_r5);
    g14_ma0 = reg(a24_s0 ^ g14_r);
    g14_ma1 = reg(a24_s1 ^ g14_r);
    g14_mb0 = a22_s0 ^ g14_rp;
    g14_q00 = g14_ma0 * g14_mb0;
    g14_q10 = g14_ma1 * g14_mb0;
    g14_mb1 = a22_s1 ^ g14_rp;
    g14_q01 = g14_ma0 * g14_mb1;
    g14_q11 = g14_ma1 * g14_mb1;
    g14_k00 = reg(g14_q00 ^ g14_r2);
    g14_k01 = reg(g14_q01 ^ g14_r3);
    g14_x0 = g14_k00 ^ g14_k01;
    g14_e0 = g14_r2 ^ g14_r3;
    g14_k10 = reg(g14_q10 ^ g14_r4);
    g14_x1 = g14_x0 ^ g14_k10;
    g14_e1 = g14_e0 ^ g14_r4;
    g14_k11 = reg(g14_q11 ^ g14_r5);
    p15_s0 = g14_x1 ^ g14_k11;
    p15_s1 = reg(g14_e1 ^ g14_r5);
    g15_ma0 = reg(a17_s0 ^ g15_r);
    g15_ma1 = reg(a17_s1 ^ g15_r);
    g15_mb0 = q6_s0 ^ g15_rp;
    g15_q00 = g15_ma0 * g15_mb0;
    g15_q10 = g15_ma1 * g15_mb0;
    g15_mb1 = q6_s1 ^ g15_rp;
    g15_q01 = g15_ma0 * g15_mb1;
    g15_q11 = g15_ma1 * g15_mb1;
    g15_k00 = reg(g15_q00 ^ g15_r2);
    g15_k01 = reg(g15_q01 ^ g15_r3);
    g15_x0 = g15_k00 ^ g15_k01;
    g15_e0 = g15_r2 ^ g15_r3;
    g15_k10 = reg(g15_q10 ^ g15_r4);
    g15_x1 = g15_x0 ^ g15_k10;
    g15_e1 = g15_e0 ^ g15_r4;
    g15_k11 = reg(g15_q11 ^ g15_r5);
    p13_s0 = g15_x1 ^ g15_k11;
    m9_s0 = p12_s0 ^ p13_s0;
    p13_s1 = reg(g15_e1 ^ g15_r5);
    m9_s1 = p12_s1 ^ p13_s1;
    g16_ma0 = reg(b6_4_s0 ^ g16_r);
    g16_ma1 = reg(b6_4_s1 ^ g16_r);
    g16_mb0 = m9_s0 ^ g16_rp;
    g16_q00 = g16_ma0 * g16_mb0;
    g16_q10 = g16_ma1 * g16_mb0;
    g16_mb1 = m9_s1 ^ g16_rp;
    g16_q01 = g16_ma0 * g16_mb1;
    g16_q11 = g16_ma1 * g16_mb1;
    g16_k00 = reg(g16_q00 ^ g16_r2);
    g16_k01 = reg(g16_q01 ^ g16_r3);
    g16_x0 = g16_k00 ^ g16_k01;
    g16_e0 = g16_r2 ^ g16_r3;
    g16_k10 = reg(g16_q10 ^ g16_r4);
    g16_x1 = g16_x0 ^ g16_k10;
    g16_e1 = g16_e0 ^ g16_r4;
    g16_k11 = reg(g16_q11 ^ g16_r5);
    p25_s0 = g16_x1 ^ g16_k11;
    p25_s1 = reg(g16_e1 ^ g16_r5);
    g17_ma0 = reg(a35_s0 ^ g17_r);
    g17_ma1 = reg(a35_s1 ^ g17_r);
    g17_mb0 = m9_s0 ^ g17_rp;
    g17_q00 = g17_ma0 * g17_mb0;
    g17_q10 = g17_ma1 * g17_mb0;
    g17_mb1 = m9_s1 ^ g17_rp;
    g17_q01 = g17_ma0 * g17_mb1;
    g17_q11 = g17_ma1 * g17_mb1;
    g17_k00 = reg(g17_q00 ^ g17_r2);
    g17_k01 = reg(g17_q01 ^ g17_r3);
    g17_x0 = g17_k00 ^ g17_k01;
    g17_e0 = g17_r2 ^ g17_r3;
    g17_k10 = reg(g17_q10 ^ g17_r4);
    g17_x1 = g17_x0 ^ g17_k10;
    g17_e1 = g17_e0 ^ g17_r4;
    g17_k11 = reg(g17_q11 ^ g17_r5);
    p34_s0 = g17_x1 ^ g17_k11;
    p34_s1 = reg(g17_e1 ^ g17_r5);
    g18_ma0 = reg(s8_s0 ^ g18_r);
    g18_ma1 = reg(s8_s1 ^ g18_r);
    g18_mb0 = s9_s0 ^ g18_rp;
    g18_q00 = g18_ma0 * g18_mb0;
    g18_q10 = g18_ma1 * g18_mb0;
    g18_mb1 = s9_s1 ^ g18_rp;
    g18_q01 = g18_ma0 * g18_mb1;
    g18_q11 = g18_ma1 * g18_mb1;
    g18_k00 = reg(g18_q00 ^ g18_r2);
    g18_k01 = reg(g18_q01 ^ g18_r3);
    g18_x0 = g18_k00 ^ g18_k01;
    g18_e0 = g18_r2 ^ g18_r3;
    g18_k10 = reg(g18_q10 ^ g18_r4);
    g18_x1 = g18_x0 ^ g18_k10;
    g18_e1 = g18_e0 ^ g18_r4;
    g18_k11 = reg(g18_q11 ^ g18_r5);
    p14_s0 = g18_x1 ^ g18_k11;
    m8_s0 = p14_s0 ^ p13_s0;
    s17_s0 = m8_s0 ^ m9_s0;
    s23_s0 = m8_s0 ^ m9_s0;
    p14_s1 = reg(g18_e1 ^ g18_r5);
    m8_s1 = p14_s1 ^ p13_s1;
    s17_s1 = m8_s1 ^ m9_s1;
    s23_s1 = m8_s1 ^ m9_s1;
    g19_ma0 = reg(b7_0_s0 ^ g19_r);
    g19_ma1 = reg(b7_0_s1 ^ g19_r);
    g19_mb0 = m8_s0 ^ g19_rp;
    g19_q00 = g19_ma0 * g19_mb0;
    g19_q10 = g19_ma1 * g19_mb0;
    g19_mb1 = m8_s1 ^ g19_rp;
    g19_q01 = g19_ma0 * g19_mb1;
    g19_q11 = g19_ma1 * g19_mb1;
    g19_k00 = reg(g19_q00 ^ g19_r2);
    g19_k01 = reg(g19_q01 ^ g19_r3);
    g19_x0 = g19_k00 ^ g19_k01;
    g19_e0 = g19_r2 ^ g19_r3;
    g19_k10 = reg(g19_q10 ^ g19_r4);
    g19_x1 = g19_x0 ^ g19_k10;
    g19_e1 = g19_e0 ^ g19_r4;
    g19_k11 = reg(g19_q11 ^ g19_r5);
    p24_s0 = g19_x1 ^ g19_k11;
    m17_s0 = p24_s0 ^ p25_s0;
    p24_s1 = reg(g19_e1 ^ g19_r5);
    m17_s1 = p24_s1 ^ p25_s1;
    g20_ma0 = reg(a25_s0 ^ g20_r);
    g20_ma1 = reg(a25_s1 ^ g20_r);
    g20_mb0 = q6_s0 ^ g20_rp;
    g20_q00 = g20_ma0 * g20_mb0;
    g20_q10 = g20_ma1 * g20_mb0;
    g20_mb1 = q6_s1 ^ g20_rp;
    g20_q01 = g20_ma0 * g20_mb1;
    g20_q11 = g20_ma1 * g20_mb1;
    g20_k00 = reg(g20_q00 ^ g20_r2);
    g20_k01 = reg(g20_q01 ^ g20_r3);
    g20_x0 = g20_k00 ^ g20_k01;
    g20_e0 = g20_r2 ^ g20_r3;
    g20_k10 = reg(g20_q10 ^ g20_r4);
    g20_x1 = g20_x0 ^ g20_k10;
    g20_e1 = g20_e0 ^ g20_r4;
    g20_k11 = reg(g20_q11 ^ g20_r5);
    p16_s0 = g20_x1 ^ g20_k11;
    m11_s0 = p15_s0 ^ p16_s0;
    a29_s0 = m9_s0 ^ m11_s0;
    a41_s0 = m9_s0 ^ m11_s0;
    p16_s1 = reg(g20_e1 ^ g20_r5);
    m11_s1 = p15_s1 ^ p16_s1;
    a29_s1 = m9_s1 ^ m11_s1;
    a41_s1 = m9_s1 ^ m11_s1;
    g21_ma0 = reg(b4_1_s0 ^ g21_r);
    g21_ma1 = reg(b4_1_s1 ^ g21_r);
    g21_mb0 = m11_s0 ^ g21_rp;
    g21_q00 = g21_ma0 * g21_mb0;
    g21_q10 = g21_ma1 * g21_mb0;
    g21_mb1 = m11_s1 ^ g21_rp;
    g21_q01 = g21_ma0 * g21_mb1;
    g21_q11 = g21_ma1 * g21_mb1;
    g21_k00 = reg(g21_q00 ^ g21_r2);
    g21_k01 = reg(g21_q01 ^ g21_r3);
    g21_x0 = g21_k00 ^ g21_k01;
    g21_e0 = g21_r2 ^ g21_r3;
    g21_k10 = reg(g21_q10 ^ g21_r4);
    g21_x1 = g21_x0 ^ g21_k10;
    g21_e1 = g21_e0 ^ g21_r4;
    g21_k11 = reg(g21_q11 ^ g21_r5);
    p19_s0 = g21_x1 ^ g21_k11;
    p19_s1 = reg(g21_e1 ^ g21_r5);
    g22_ma0 = reg(a27_s0 ^ g22_r);
    g22_ma1 = reg(a27_s1 ^ g22_r);
    g22_mb0 = a29_s0 ^ g22_rp;
    g22_q00 = g22_ma0 * g22_mb0;
    g22_q10 = g22_ma1 * g22_mb0;
    g22_mb1 = a29_s1 ^ g22_rp;
    g22_q01 = g22_ma0 * g22_mb1;
    g22_q11 = g22_ma1 * g22_mb1;
    g22_k00 = reg(g22_q00 ^ g22_r2);
    g22_k01 = reg(g22_q01 ^ g22_r3);
    g22_x0 = g22_k00 ^ g22_k01;
    g22_e0 = g22_r2 ^ g22_r3;
    g22_k10 = reg(g22_q10 ^ g22_r4);
    g22_x1 = g22_x0 ^ g22_k10;
    g22_e1 = g22_e0 ^ g22_r4;
    g22_k11 = reg(g22_q11 ^ g22_r5);
    p22_s0 = g22_x1 ^ g22_k11;
    p22_s1 = reg(g22_e1 ^ g22_r5);
    g23_ma0 = reg(a37_s0 ^ g23_r);
    g23_ma1 = reg(a37_s1 ^ g23_r);
    g23_mb0 = m11_s0 ^ g23_rp;
    g23_q00 = g23_ma0 * g23_mb0;
    g23_q10 = g23_ma1 * g23_mb0;
    g23_mb1 = m11_s1 ^ g23_rp;
    g23_q01 = g23_ma0 * g23_mb1;
    g23_q11 = g23_ma1 * g23_mb1;
    g23_k00 = reg(g23_q00 ^ g23_r2);
    g23_k01 = reg(g23_q01 ^ g23_r3);
    g23_x0 = g23_k00 ^ g23_k01;
    g23_e0 = g23_r2 ^ g23_r3;
    g23_k10 = reg(g23_q10 ^ g23_r4);
    g23_x1 = g23_x0 ^ g23_k10;
    g23_e1 = g23_e0 ^ g23_r4;
    g23_k11 = reg(g23_q11 ^ g23_r5);
    p28_s0 = g23_x1 ^ g23_k11;
    p28_s1 = reg(g23_e1 ^ g23_r5);
    g24_ma0 = reg(a39_s0 ^ g24_r);
    g24_ma1 = reg(a39_s1 ^ g24_r);
    g24_mb0 = a41_s0 ^ g24_rp;
    g24_q00 = g24_ma0 * g24_mb0;
    g24_q10 = g24_ma1 * g24_mb0;
    g24_mb1 = a41_s1 ^ g24_rp;
    g24_q01 = g24_ma0 * g24_mb1;
    g24_q11 = g24_ma1 * g24_mb1;
    g24_k00 = reg(g24_q00 ^ g24_r2);
    g24_k01 = reg(g24_q01 ^ g24_r3);
    g24_x0 = g24_k00 ^ g24_k01;
    g24_e0 = g24_r2 ^ g24_r3;
    g24_k10 = reg(g24_q10 ^ g24_r4);
    g24_x1 = g24_x0 ^ g24_k10;
    g24_e1 = g24_e0 ^ g24_r4;
    g24_k11 = reg(g24_q11 ^ g24_r5);
    p31_s0 = g24_x1 ^ g24_k11;
    p31_s1 = reg(g24_e1 ^ g24_r5);
    g25_ma0 = reg(s10_s0 ^ g25_r);
    g25_ma1 = reg(s10_s1 ^ g25_r);
    g25_mb0 = s11_s0 ^ g25_rp;
    g25_q00 = g25_ma0 * g25_mb0;
    g25_q10 = g25_ma1 * g25_mb0;
    g25_mb1 = s11_s1 ^ g25_rp;
    g25_q01 = g25_ma0 * g25_mb1;
    g25_q11 = g25_ma1 * g25_mb1;
    g25_k00 = reg(g25_q00 ^ g25_r2);
    g25_k01 = reg(g25_q01 ^ g25_r3);
    g25_x0 = g25_k00 ^ g25_k01;
    g25_e0 = g25_r2 ^ g25_r3;
    g25_k10 = reg(g25_q10 ^ g25_r4);
    g25_x1 = g25_x0 ^ g25_k10;
    g25_e1 = g25_e0 ^ g25_r4;
    g25_k11 = reg(g25_q11 ^ g25_r5);
    p17_s0 = g25_x1 ^ g25_k11;
    m10_s0 = p17_s0 ^ p16_s0;
    s13_s0 = m10_s0 ^ m11_s0;
    a28_s0 = m8_s0 ^ m10_s0;
    s15_s0 = a28_s0 ^ a29_s0;
    s19_s0 = m10_s0 ^ m11_s0;
    a40_s0 = m8_s0 ^ m10_s0;
    s21_s0 = a40_s0 ^ a41_s0;
    p17_s1 = reg(g25_e1 ^ g25_r5);
    m10_s1 = p17_s1 ^ p16_s1;
    s13_s1 = m10_s1 ^ m11_s1;
    a28_s1 = m8_s1 ^ m10_s1;
    s15_s1 = a28_s1 ^ a29_s1;
    s19_s1 = m10_s1 ^ m11_s1;
    a40_s1 = m8_s1 ^ m10_s1;
    s21_s1 = a40_s1 ^ a41_s1;
    g26_ma0 = reg(b5_0_s0 ^ g26_r);
    g26_ma1 = reg(b5_0_s1 ^ g26_r);
    g26_mb0 = m10_s0 ^ g26_rp;
    g26_q00 = g26_ma0 * g26_mb0;
    g26_q10 = g26_ma1 * g26_mb0;
    g26_mb1 = m10_s1 ^ g26_rp;
    g26_q01 = g26_ma0 * g26_mb1;
    g26_q11 = g26_ma1 * g26_mb1;
    g26_k00 = reg(g26_q00 ^ g26_r2);
    g26_k01 = reg(g26_q01 ^ g26_r3);
    g26_x0 = g26_k00 ^ g26_k01;
    g26_e0 = g26_r2 ^ g26_r3;
    g26_k10 = reg(g26_q10 ^ g26_r4);
    g26_x1 = g26_x0 ^ g26_k10;
    g26_e1 = g26_e0 ^ g26_r4;
    g26_k11 = reg(g26_q11 ^ g26_r5);
    p18_s0 = g26_x1 ^ g26_k11;
    m13_s0 = p18_s0 ^ p19_s0;
    p18_s1 = reg(g26_e1 ^ g26_r5);
    m13_s1 = p18_s1 ^ p19_s1;
    g27_ma0 = reg(s12_s0 ^ g27_r);
    g27_ma1 = reg(s12_s1 ^ g27_r);
    g27_mb0 = s13_s0 ^ g27_rp;
    g27_q00 = g27_ma0 * g27_mb0;
    g27_q10 = g27_ma1 * g27_mb0;
    g27_mb1 = s13_s1 ^ g27_rp;
    g27_q01 = g27_ma0 * g27_mb1;
    g27_q11 = g27_ma1 * g27_mb1;
    g27_k00 = reg(g27_q00 ^ g27_r2);
    g27_k01 = reg(g27_q01 ^ g27_r3);
    g27_x0 = g27_k00 ^ g27_k01;
    g27_e0 = g27_r2 ^ g27_r3;
    g27_k10 = reg(g27_q10 ^ g27_r4);
    g27_x1 = g27_x0 ^ g27_k10;
    g27_e1 = g27_e0 ^ g27_r4;
    g27_k11 = reg(g27_q11 ^ g27_r5);
    p20_s0 = g27_x1 ^ g27_k11;
    m12_s0 = p20_s0 ^ p19_s0;
    p20_s1 = reg(g27_e1 ^ g27_r5);
    m12_s1 = p20_s1 ^ p19_s1;
    g28_ma0 = reg(a36_s0 ^ g28_r);
    g28_ma1 = reg(a36_s1 ^ g28_r);
    g28_mb0 = m10_s0 ^ g28_rp;
    g28_q00 = g28_ma0 * g28_mb0;
    g28_q10 = g28_ma1 * g28_mb0;
    g28_mb1 = m10_s1 ^ g28_rp;
    g28_q01 = g28_ma0 * g28_mb1;
    g28_q11 = g28_ma1 * g28_mb1;
    g28_k00 = reg(g28_q00 ^ g28_r2);
    g28_k01 = reg(g28_q01 ^ g28_r3);
    g28_x0 = g28_k00 ^ g28_k01;
    g28_e0 = g28_r2 ^ g28_r3;
    g28_k10 = reg(g28_q10 ^ g28_r4);
    g28_x1 = g28_x0 ^ g28_k10;
    g28_e1 = g28_e0 ^ g28_r4;
    g28_k11 = reg(g28_q11 ^ g28_r5);
    p27_s0 = g28_x1 ^ g28_k11;
    m19_s0 = p27_s0 ^ p28_s0;
    p27_s1 = reg(g28_e1 ^ g28_r5);
    m19_s1 = p27_s1 ^ p28_s1;
    g29_ma0 = reg(s18_s0 ^ g29_r);
    g29_ma1 = reg(s18_s1 ^ g29_r);
    g29_mb0 = s19_s0 ^ g29_rp;
    g29_q00 = g29_ma0 * g29_mb0;
    g29_q10 = g29_ma1 * g29_mb0;
    g29_mb1 = s19_s1 ^ g29_rp;
    g29_q01 = g29_ma0 * g29_mb1;
    g29_q11 = g29_ma1 * g29_mb1;
    g29_k00 = reg(g29_q00 ^ g29_r2);
    g29_k01 = reg(g29_q01 ^ g29_r3);
    g29_x0 = g29_k00 ^ g29_k01;
    g29_e0 = g29_r2 ^ g29_r3;
    g29_k10 = reg(g29_q10 ^ g29_r4);
    g29_x1 = g29_x0 ^ g29_k10;
    g29_e1 = g29_e0 ^ g29_r4;
    g29_k11 = reg(g29_q11 ^ g29_r5);
    p29_s0 = g29_x1 ^ g29_k11;
    m18_s0 = p29_s0 ^ p28_s0;
    p29_s1 = reg(g29_e1 ^ g29_r5);
    m18_s1 = p29_s1 ^ p28_s1;
    g30_ma0 = reg(a26_s0 ^ g30_r);
    g30_ma1 = reg(a26_s1 ^ g30_r);
    g30_mb0 = a28_s0 ^ g30_rp;
    g30_q00 = g30_ma0 * g30_mb0;
    g30_q10 = g30_ma1 * g30_mb0;
    g30_mb1 = a28_s1 ^ g30_rp;
    g30_q01 = g30_ma0 * g30_mb1;
    g30_q11 = g30_ma1 * g30_mb1;
    g30_k00 = reg(g30_q00 ^ g30_r2);
    g30_k01 = reg(g30_q01 ^ g30_r3);
    g30_x0 = g30_k00 ^ g30_k01;
    g30_e0 = g30_r2 ^ g30_r3;
    g30_k10 = reg(g30_q10 ^ g30_r4);
    g30_x1 = g30_x0 ^ g30_k10;
    g30_e1 = g30_e0 ^ g30_r4;
    g30_k11 = reg(g30_q11 ^ g30_r5);
    p21_s0 = g30_x1 ^ g30_k11;
    m15_s0 = p21_s0 ^ p22_s0;
    a31_s0 = m15_s0 ^ m13_s0;
    p21_s1 = reg(g30_e1 ^ g30_r5);
    m15_s1 = p21_s1 ^ p22_s1;
    a31_s1 = m15_s1 ^ m13_s1;
    g31_ma0 = reg(s14_s0 ^ g31_r);
    g31_ma1 = reg(s14_s1 ^ g31_r);
    g31_mb0 = s15_s0 ^ g31_rp;
    g31_q00 = g31_ma0 * g31_mb0;
    g31_q10 = g31_ma1 * g31_mb0;
    g31_mb1 = s15_s1 ^ g31_rp;
    g31_q01 = g31_ma0 * g31_mb1;
    g31_q11 = g31_ma1 * g31_mb1;
    g31_k00 = reg(g31_q00 ^ g31_r2);
    g31_k01 = reg(g31_q01 ^ g31_r3);
    g31_x0 = g31_k00 ^ g31_k01;
    g31_e0 = g31_r2 ^ g31_r3;
    g31_k10 = reg(g31_q10 ^ g31_r4);
    g31_x1 = g31_x0 ^ g31_k10;
    g31_e1 = g31_e0 ^ g31_r4;
    g31_k11 = reg(g31_q11 ^ g31_r5);
    p23_s0 = g31_x1 ^ g31_k11;
    m14_s0 = p23_s0 ^ p22_s0;
    a30_s0 = m14_s0 ^ m12_s0;
    p23_s1 = reg(g31_e1 ^ g31_r5);
    m14_s1 = p23_s1 ^ p22_s1;
    a30_s1 = m14_s1 ^ m12_s1;
    g32_ma0 = reg(s16_s0 ^ g32_r);
    g32_ma1 = reg(s16_s1 ^ g32_r);
    g32_mb0 = s17_s0 ^ g32_rp;
    g32_q00 = g32_ma0 * g32_mb0;
    g32_q10 = g32_ma1 * g32_mb0;
    g32_mb1 = s17_s1 ^ g32_rp;
    g32_q01 = g32_ma0 * g32_mb1;
    g32_q11 = g32_ma1 * g32_mb1;
    g32_k00 = reg(g32_q00 ^ g32_r2);
    g32_k01 = reg(g32_q01 ^ g32_r3);
    g32_x0 = g32_k00 ^ g32_k01;
    g32_e0 = g32_r2 ^ g32_r3;
    g32_k10 = reg(g32_q10 ^ g32_r4);
    g32_x1 = g32_x0 ^ g32_k10;
    g32_e1 = g32_e0 ^ g32_r4;
    g32_k11 = reg(g32_q11 ^ g32_r5);
    p26_s0 = g32_x1 ^ g32_k11;
    m16_s0 = p26_s0 ^ p25_s0;
    k4_s0 = m16_s0 ^ m17_s0;
    a32_s0 = k4_s0 ^ m12_s0;
    a33_s0 = m16_s0 ^ m13_s0;
    o6_0_s0 = a33_s0 ^ a32_s0;
    o6n0_s0 = ~o6_0_s0;
    p26_s1 = reg(g32_e1 ^ g32_r5);
    m16_s1 = p26_s1 ^ p25_s1;
    k4_s1 = m16_s1 ^ m17_s1;
    a32_s1 = k4_s1 ^ m12_s1;
    a33_s1 = m16_s1 ^ m13_s1;
    o6_0_s1 = a33_s1 ^ a32_s1;
    g33_ma0 = reg(a38_s0 ^ g33_r);
    g33_ma1 = reg(a38_s1 ^ g33_r);
    g33_mb0 = a40_s0 ^ g33_rp;
    g33_q00 = g33_ma0 * g33_mb0;
    g33_q10 = g33_ma1 * g33_mb0;
    g33_mb1 = a40_s1 ^ g33_rp;
    g33_q01 = g33_ma0 * g33_mb1;
    g33_q11 = g33_ma1 * g33_mb1;
    g33_k00 = reg(g33_q00 ^ g33_r2);
    g33_k01 = reg(g33_q01 ^ g33_r3);
    g33_x0 = g33_k00 ^ g33_k01;
    g33_e0 = g33_r2 ^ g33_r3;
    g33_k10 = reg(g33_q10 ^ g33_r4);
    g33_x1 = g33_x0 ^ g33_k10;
    g33_e1 = g33_e0 ^ g33_r4;
    g33_k11 = reg(g33_q11 ^ g33_r5);
    p30_s0 = g33_x1 ^ g33_k11;
    m21_s0 = p30_s0 ^ p31_s0;
    a43_s0 = m21_s0 ^ m19_s0;
    o5_0_s0 = a43_s0 ^ a33_s0;
    o5_1_s0 = o5_0_s0 ^ a32_s0;
    o5_2_s0 = o5_1_s0 ^ a31_s0;
    o5n0_s0 = ~o5_2_s0;
    p30_s1 = reg(g33_e1 ^ g33_r5);
    m21_s1 = p30_s1 ^ p31_s1;
    a43_s1 = m21_s1 ^ m19_s1;
    o5_0_s1 = a43_s1 ^ a33_s1;
    o5_1_s1 = o5_0_s1 ^ a32_s1;
    o5_2_s1 = o5_1_s1 ^ a31_s1;
    g34_ma0 = reg(s20_s0 ^ g34_r);
    g34_ma1 = reg(s20_s1 ^ g34_r);
    g34_mb0 = s21_s0 ^ g34_rp;
    g34_q00 = g34_ma0 * g34_mb0;
    g34_q10 = g34_ma1 * g34_mb0;
    g34_mb1 = s21_s1 ^ g34_rp;
    g34_q01 = g34_ma0 * g34_mb1;
    g34_q11 = g34_ma1 * g34_mb1;
    g34_k00 = reg(g34_q00 ^ g34_r2);
    g34_k01 = reg(g34_q01 ^ g34_r3);
    g34_x0 = g34_k00 ^ g34_k01;
    g34_e0 = g34_r2 ^ g34_r3;
    g34_k10 = reg(g34_q10 ^ g34_r4);
    g34_x1 = g34_x0 ^ g34_k10;
    g34_e1 = g34_e0 ^ g34_r4;
    g34_k11 = reg(g34_q11 ^ g34_r5);
    p32_s0 = g34_x1 ^ g34_k11;
    m20_s0 = p32_s0 ^ p31_s0;
    a42_s0 = m20_s0 ^ m18_s0;
    o7_0_s0 = a43_s0 ^ a42_s0;
    o7_1_s0 = o7_0_s0 ^ a32_s0;
    p32_s1 = reg(g34_e1 ^ g34_r5);
    m20_s1 = p32_s1 ^ p31_s1;
    a42_s1 = m20_s1 ^ m18_s1;
    o7_0_s1 = a43_s1 ^ a42_s1;
    o7_1_s1 = o7_0_s1 ^ a32_s1;
    g35_ma0 = reg(a34_s0 ^ g35_r);
    g35_ma1 = reg(a34_s1 ^ g35_r);
    g35_mb0 = m8_s0 ^ g35_rp;
    g35_q00 = g35_ma0 * g35_mb0;
    g35_q10 = g35_ma1 * g35_mb0;
    g35_mb1 = m8_s1 ^ g35_rp;
    g35_q01 = g35_ma0 * g35_mb1;
    g35_q11 = g35_ma1 * g35_mb1;
    g35_k00 = reg(g35_q00 ^ g35_r2);
    g35_k01 = reg(g35_q01 ^ g35_r3);
    g35_x0 = g35_k00 ^ g35_k01;
    g35_e0 = g35_r2 ^ g35_r3;
    g35_k10 = reg(g35_q10 ^ g35_r4);
    g35_x1 = g35_x0 ^ g35_k10;
    g35_e1 = g35_e0 ^ g35_r4;
    g35_k11 = reg(g35_q11 ^ g35_r5);
    p33_s0 = g35_x1 ^ g35_k11;
    m23_s0 = p33_s0 ^ p34_s0;
    p33_s1 = reg(g35_e1 ^ g35_r5);
    m23_s1 = p33_s1 ^ p34_s1;
    g36_ma0 = reg(s22_s0 ^ g36_r);
    g36_ma1 = reg(s22_s1 ^ g36_r);
    g36_mb0 = s23_s0 ^ g36_rp;
    g36_q00 = g36_ma0 * g36_mb0;
    g36_q10 = g36_ma1 * g36_mb0;
    g36_mb1 = s23_s1 ^ g36_rp;
    g36_q01 = g36_ma0 * g36_mb1;
    g36_q11 = g36_ma1 * g36_mb1;
    g36_k00 = reg(g36_q00 ^ g36_r2);
    g36_k01 = reg(g36_q01 ^ g36_r3);
    g36_x0 = g36_k00 ^ g36_k01;
    g36_e0 = g36_r2 ^ g36_r3;
    g36_k10 = reg(g36_q10 ^ g36_r4);
    g36_x1 = g36_x0 ^ g36_k10;
    g36_e1 = g36_e0 ^ g36_r4;
    g36_k11 = reg(g36_q11 ^ g36_r5);
    p35_s0 = g36_x1 ^ g36_k11;
    m22_s0 = p35_s0 ^ p34_s0;
    k5_s0 = m22_s0 ^ m23_s0;
    a44_s0 = k5_s0 ^ m18_s0;
    a45_s0 = m22_s0 ^ m19_s0;
    o0_0_s0 = a45_s0 ^ a44_s0;
    o0_1_s0 = o0_0_s0 ^ a42_s0;
    o0_2_s0 = o0_1_s0 ^ a33_s0;
    o0_3_s0 = o0_2_s0 ^ a31_s0;
    o0n0_s0 = ~o0_3_s0;
    o1_0_s0 = a45_s0 ^ a43_s0;
    o1_1_s0 = o1_0_s0 ^ a33_s0;
    o1_2_s0 = o1_1_s0 ^ a32_s0;
    o1n0_s0 = ~o1_2_s0;
    o2_0_s0 = a45_s0 ^ a42_s0;
    o2_1_s0 = o2_0_s0 ^ a32_s0;
    o2_2_s0 = o2_1_s0 ^ a30_s0;
    o3_0_s0 = a45_s0 ^ a44_s0;
    o3_1_s0 = o3_0_s0 ^ a42_s0;
    o3_2_s0 = o3_1_s0 ^ a33_s0;
    o3_3_s0 = o3_2_s0 ^ a30_s0;
    o4_0_s0 = a45_s0 ^ a44_s0;
    o4_1_s0 = o4_0_s0 ^ a43_s0;
    o4_2_s0 = o4_1_s0 ^ a42_s0;
    o4_3_s0 = o4_2_s0 ^ a33_s0;
    o4_4_s0 = o4_3_s0 ^ a32_s0;
    o4_5_s0 = o4_4_s0 ^ a30_s0;
    p35_s1 = reg(g36_e1 ^ g36_r5);
    m22_s1 = p35_s1 ^ p34_s1;
    k5_s1 = m22_s1 ^ m23_s1;
    a44_s1 = k5_s1 ^ m18_s1;
    a45_s1 = m22_s1 ^ m19_s1;
    o0_0_s1 = a45_s1 ^ a44_s1;
    o0_1_s1 = o0_0_s1 ^ a42_s1;
    o0_2_s1 = o0_1_s1 ^ a33_s1;
    o0_3_s1 = o0_2_s1 ^ a31_s1;
    o1_0_s1 = a45_s1 ^ a43_s1;
    o1_1_s1 = o1_0_s1 ^ a33_s1;
    o1_2_s1 = o1_1_s1 ^ a32_s1;
    o2_0_s1 = a45_s1 ^ a42_s1;
    o2_1_s1 = o2_0_s1 ^ a32_s1;
    o2_2_s1 = o2_1_s1 ^ a30_s1;
    o3_0_s1 = a45_s1 ^ a44_s1;
    o3_1_s1 = o3_0_s1 ^ a42_s1;
    o3_2_s1 = o3_1_s1 ^ a33_s1;
    o3_3_s1 = o3_2_s1 ^ a30_s1;
    o4_0_s1 = a45_s1 ^ a44_s1;
    o4_1_s1 = o4_0_s1 ^ a43_s1;
    o4_2_s1 = o4_1_s1 ^ a42_s1;
    o4_3_s1 = o4_2_s1 ^ a33_s1;
    o4_4_s1 = o4_3_s1 ^ a32_s1;
    o4_5_s1 = o4_4_s1 ^ a30_s1;
    *y0_s0 = o0n0_s0;
    *y0_s1 = o0_3_s1;
    *y1_s0 = o1n0_s0;
    *y1_s1 = o1_2_s1;
    *y2_s0 = o2_2_s0;
    *y2_s1 = o2_2_s1;
    *y3_s0 = o3_3_s0;
    *y3_s1 = o3_3_s1;
    *y4_s0 = o4_5_s0;
    *y4_s1 = o4_5_s1;
    *y5_s0 = o5n0_s0;
    *y5_s1 = o5_2_s1;
    *y6_s0 = o6n0_s0;
    *y6_s1 = o6_0_s1;
    *y7_s0 = o7_1_s0;
    *y7_s1 = o7_1_s1;
    return 0;
}
