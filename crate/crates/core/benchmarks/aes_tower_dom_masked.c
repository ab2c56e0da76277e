int aes_sbox(bool x0_s0, bool x0_s1, bool x1_s0, bool x1_s1, bool x2_s0, bool x2_s1, bool x3_s0, bool x3_s1, bool x4_s0, bool x4_s1, bool x5_s0, bool x5_s1, bool x6_s0, bool x6_s1, bool x7_s0, bool x7_s1, bool g1_r, bool g2_r, bool g3_r, bool g4_r, bool g5_r, bool g6_r, bool g7_r, bool g8_r, bool g9_r, bool g10_r, bool g11_r, bool g12_r, bool g13_r, bool g14_r, bool g15_r, bool g16_r, bool g17_r, bool g18_r, bool g19_r, bool g20_r, bool g21_r, bool g22_r, bool g23_r, bool g24_r, bool g25_r, bool g26_r, bool g27_r, bool g28_r, bool g29_r, bool g30_r, bool g31_r, bool g32_r, bool g33_r, bool g34_r, bool g35_r, bool g36_r, bool *y0_s0, bool *y0_s1, bool *y1_s0, bool *y1_s1, bool *y2_s0, bool *y2_s1, bool *y3_s0, bool *y3_s1, bool *y4_s0, bool *y4_s1, bool *y5_s0, bool *y5_s1, bool *y6_s0, bool *y6_s1, bool *y7_s0, bool *y7_s1)
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
    g1_p10 = b5_0_s1 * b1_1_s0;
    g1_p00 = b5_0_s0 * b1_1_s0;
    s1_s0 = b1_1_s0 ^ b0_0_s0;
    q3_s0 = b1_1_s0 ^ b0_0_s0;
    a36_s0 = b5_0_s0 ^ b1_1_s0;
    b3_0_s0 = x3_s0 ^ x5_s0;
    b4_0_s0 = x4_s0 ^ x5_s0;
    b1_1_s1 = b1_0_s1 ^ x5_s1;
    g1_p01 = b5_0_s0 * b1_1_s1;
    g1_p11 = b5_0_s1 * b1_1_s1;
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
    g2_p00 = b4_1_s0 * b0_0_s0;
    g2_p01 = b4_1_s0 * b0_0_s1;
    s0_s0 = b5_0_s0 ^ b4_1_s0;
    g3_p00 = s0_s0 * s1_s0;
    g3_p01 = s0_s0 * s1_s1;
    s12_s0 = b5_0_s0 ^ b4_1_s0;
    a37_s0 = b4_1_s0 ^ b0_0_s0;
    s18_s0 = a36_s0 ^ a37_s0;
    b6_3_s0 = b6_2_s0 ^ x6_s0;
    b3_1_s1 = b3_0_s1 ^ x6_s1;
    a4_s1 = b3_1_s1 ^ b1_1_s1;
    a15_s1 = b3_1_s1 ^ q3_s1;
    b4_1_s1 = b4_0_s1 ^ x6_s1;
    q1_s1 = b5_0_s1 ^ b4_1_s1;
    g2_p10 = b4_1_s1 * b0_0_s0;
    g2_p11 = b4_1_s1 * b0_0_s1;
    s0_s1 = b5_0_s1 ^ b4_1_s1;
    g3_p10 = s0_s1 * s1_s0;
    g3_p11 = s0_s1 * s1_s1;
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
    g4_p00 = a3_s0 * a5_s0;
    g5_p00 = b6_4_s0 * b2_2_s0;
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
    g6_p00 = a2_s0 * a4_s0;
    g6_p01 = a2_s0 * a4_s1;
    s2_s0 = a2_s0 ^ a3_s0;
    g7_p00 = s2_s0 * s3_s0;
    g8_p00 = b7_0_s0 * b3_1_s0;
    g8_p01 = b7_0_s0 * b3_1_s1;
    s4_s0 = b7_0_s0 ^ b6_4_s0;
    g9_p00 = s4_s0 * s5_s0;
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
    g7_p01 = s2_s0 * s3_s1;
    g4_p01 = a3_s0 * a5_s1;
    s5_s1 = b3_1_s1 ^ b2_2_s1;
    g9_p01 = s4_s0 * s5_s1;
    q2_s1 = b3_1_s1 ^ b2_2_s1;
    k2_s1 = b3_1_s1 ^ q2_s1;
    a14_s1 = k2_s1 ^ b1_1_s1;
    g5_p01 = b6_4_s0 * b2_2_s1;
    b6_4_s1 = b6_3_s1 ^ x7_s1;
    a3_s1 = b6_4_s1 ^ b4_1_s1;
    g4_p10 = a3_s1 * a5_s0;
    g4_p11 = a3_s1 * a5_s1;
    g5_p10 = b6_4_s1 * b2_2_s0;
    g5_p11 = b6_4_s1 * b2_2_s1;
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
    g6_p10 = a2_s1 * a4_s0;
    g6_p11 = a2_s1 * a4_s1;
    s2_s1 = a2_s1 ^ a3_s1;
    g7_p10 = s2_s1 * s3_s0;
    g7_p11 = s2_s1 * s3_s1;
    g8_p10 = b7_0_s1 * b3_1_s0;
    g8_p11 = b7_0_s1 * b3_1_s1;
    s4_s1 = b7_0_s1 ^ b6_4_s1;
    g9_p10 = s4_s1 * s5_s0;
    g9_p11 = s4_s1 * s5_s1;
    a26_s1 = b7_0_s1 ^ b5_0_s1;
    s14_s1 = a26_s1 ^ a27_s1;
    s16_s1 = b7_0_s1 ^ b6_4_s1;
    a34_s1 = b7_0_s1 ^ b3_1_s1;
    a38_s1 = a34_s1 ^ a36_s1;
    s20_s1 = a38_s1 ^ a39_s1;
    s22_s1 = a34_s1 ^ a35_s1;
    g1_i01 = reg(g1_p01 ^ g1_r);
    p0_s0 = g1_i01 ^ g1_p00;
    g1_i10 = reg(g1_p10 ^ g1_r);
    p0_s1 = g1_i10 ^ g1_p11;
    g2_i01 = reg(g2_p01 ^ g2_r);
    p1_s0 = g2_i01 ^ g2_p00;
    m1_s0 = p0_s0 ^ p1_s0;
    g2_i10 = reg(g2_p10 ^ g2_r);
    p1_s1 = g2_i10 ^ g2_p11;
    m1_s1 = p0_s1 ^ p1_s1;
    g3_i01 = reg(g3_p01 ^ g3_r);
    p2_s0 = g3_i01 ^ g3_p00;
    m0_s0 = p2_s0 ^ p1_s0;
    g3_i10 = reg(g3_p10 ^ g3_r);
    p2_s1 = g3_i10 ^ g3_p11;
    m0_s1 = p2_s1 ^ p1_s1;
    g4_i01 = reg(g4_p01 ^ g4_r);
    p4_s0 = g4_i01 ^ g4_p00;
    g4_i10 = reg(g4_p10 ^ g4_r);
    p4_s1 = g4_i10 ^ g4_p11;
    g5_i01 = reg(g5_p01 ^ g5_r);
    p7_s0 = g5_i01 ^ g5_p00;
    g5_i10 = reg(g5_p10 ^ g5_r);
    p7_s1 = g5_i10 ^ g5_p11;
    g6_i01 = reg(g6_p01 ^ g6_r);
    p3_s0 = g6_i01 ^ g6_p00;
    m3_s0 = p3_s0 ^ p4_s0;
    a7_s0 = m3_s0 ^ m1_s0;
    a11_s0 = l3_s0 ^ a7_s0;
    a17_s0 = a11_s0 ^ q2_s0;
    g6_i10 = reg(g6_p10 ^ g6_r);
    p3_s1 = g6_i10 ^ g6_p11;
    m3_s1 = p3_s1 ^ p4_s1;
    a7_s1 = m3_s1 ^ m1_s1;
    a11_s1 = l3_s1 ^ a7_s1;
    a17_s1 = a11_s1 ^ q2_s1;
    g7_i01 = reg(g7_p01 ^ g7_r);
    p5_s0 = g7_i01 ^ g7_p00;
    m2_s0 = p5_s0 ^ p4_s0;
    a6_s0 = m2_s0 ^ m0_s0;
    a10_s0 = l2_s0 ^ a6_s0;
    a16_s0 = a10_s0 ^ b3_1_s0;
    q4_s0 = a16_s0 ^ a17_s0;
    k3_s0 = a16_s0 ^ q4_s0;
    s6_s0 = a16_s0 ^ a17_s0;
    s8_s0 = a16_s0 ^ a17_s0;
    g7_i10 = reg(g7_p10 ^ g7_r);
    p5_s1 = g7_i10 ^ g7_p11;
    m2_s1 = p5_s1 ^ p4_s1;
    a6_s1 = m2_s1 ^ m0_s1;
    a10_s1 = l2_s1 ^ a6_s1;
    a16_s1 = a10_s1 ^ b3_1_s1;
    q4_s1 = a16_s1 ^ a17_s1;
    k3_s1 = a16_s1 ^ q4_s1;
    s6_s1 = a16_s1 ^ a17_s1;
    s8_s1 = a16_s1 ^ a17_s1;
    g8_i01 = reg(g8_p01 ^ g8_r);
    p6_s0 = g8_i01 ^ g8_p00;
    m5_s0 = p6_s0 ^ p7_s0;
    g8_i10 = reg(g8_p10 ^ g8_r);
    p6_s1 = g8_i10 ^ g8_p11;
    m5_s1 = p6_s1 ^ p7_s1;
    g9_i01 = reg(g9_p01 ^ g9_r);
    p8_s0 = g9_i01 ^ g9_p00;
    m4_s0 = p8_s0 ^ p7_s0;
    k1_s0 = m4_s0 ^ m5_s0;
    a8_s0 = k1_s0 ^ m0_s0;
    a12_s0 = q0_s0 ^ a8_s0;
    a18_s0 = a12_s0 ^ a14_s0;
    g10_p10 = a16_s1 * a18_s0;
    g10_p00 = a16_s0 * a18_s0;
    a24_s0 = a16_s0 ^ a18_s0;
    a9_s0 = m4_s0 ^ m1_s0;
    a13_s0 = l4_s0 ^ a9_s0;
    a19_s0 = a13_s0 ^ a15_s0;
    g11_p10 = a17_s1 * a19_s0;
    g11_p00 = a17_s0 * a19_s0;
    s7_s0 = a18_s0 ^ a19_s0;
    g12_p10 = s6_s1 * s7_s0;
    g12_p00 = s6_s0 * s7_s0;
    q5_s0 = a18_s0 ^ a19_s0;
    a25_s0 = a17_s0 ^ a19_s0;
    s10_s0 = a24_s0 ^ a25_s0;
    g9_i10 = reg(g9_p10 ^ g9_r);
    p8_s1 = g9_i10 ^ g9_p11;
    m4_s1 = p8_s1 ^ p7_s1;
    k1_s1 = m4_s1 ^ m5_s1;
    a8_s1 = k1_s1 ^ m0_s1;
    a12_s1 = q0_s1 ^ a8_s1;
    a18_s1 = a12_s1 ^ a14_s1;
    g10_p01 = a16_s0 * a18_s1;
    g10_p11 = a16_s1 * a18_s1;
    a24_s1 = a16_s1 ^ a18_s1;
    a9_s1 = m4_s1 ^ m1_s1;
    a13_s1 = l4_s1 ^ a9_s1;
    a19_s1 = a13_s1 ^ a15_s1;
    g11_p01 = a17_s0 * a19_s1;
    g11_p11 = a17_s1 * a19_s1;
    s7_s1 = a18_s1 ^ a19_s1;
    g12_p01 = s6_s0 * s7_s1;
    g12_p11 = s6_s1 * s7_s1;
    q5_s1 = a18_s1 ^ a19_s1;
    a25_s1 = a17_s1 ^ a19_s1;
    s10_s1 = a24_s1 ^ a25_s1;
    g10_i01 = reg(g10_p01 ^ g10_r);
    p9_s0 = g10_i01 ^ g10_p00;
    g10_i10 = reg(g10_p10 ^ g10_r);
    p9_s1 = g10_i10 ^ g10_p11;
    g11_i01 = reg(g11_p01 ^ g11_r);
    p10_s0 = g11_i01 ^ g11_p00;
    m7_s0 = p9_s0 ^ p10_s0;
    a21_s0 = a16_s0 ^ m7_s0;
    a23_s0 = a21_s0 ^ q5_s0;
    g11_i10 = reg(g11_p10 ^ g11_r);
    p10_s1 = g11_i10 ^ g11_p11;
    m7_s1 = p9_s1 ^ p10_s1;
    a21_s1 = a16_s1 ^ m7_s1;
    a23_s1 = a21_s1 ^ q5_s1;
    g12_i01 = reg(g12_p01 ^ g12_r);
    p11_s0 = g12_i01 ^ g12_p00;
    m6_s0 = p11_s0 ^ p10_s0;
    a20_s0 = k3_s0 ^ m6_s0;
    a22_s0 = a20_s0 ^ a18_s0;
    g13_p10 = a16_s1 * a22_s0;
    g13_p00 = a16_s0 * a22_s0;
    g14_p10 = a24_s1 * a22_s0;
    g14_p00 = a24_s0 * a22_s0;
    q6_s0 = a22_s0 ^ a23_s0;
    g15_p10 = a17_s1 * q6_s0;
    g15_p00 = a17_s0 * q6_s0;
    s9_s0 = a22_s0 ^ q6_s0;
    g18_p10 = s8_s1 * s9_s0;
    g18_p00 = s8_s0 * s9_s0;
    s11_s0 = a22_s0 ^ q6_s0;
    g25_p10 = s10_s1 * s11_s0;
    g25_p00 = s10_s0 * s11_s0;
    g20_p10 = a25_s1 * q6_s0;
    g20_p00 = a25_s0 * q6_s0;
    g12_i10 = reg(g12_p10 ^ g12_r);
    p11_s1 = g12_i10 ^ g12_p11;
    m6_s1 = p11_s1 ^ p10_s1;
    a20_s1 = k3_s1 ^ m6_s1;
    a22_s1 = a20_s1 ^ a18_s1;
    g13_p01 = a16_s0 * a22_s1;
    g13_p11 = a16_s1 * a22_s1;
    g14_p01 = a24_s0 * a22_s1;
    g14_p11 = a24_s1 * a22_s1;
    q6_s1 = a22_s1 ^ a23_s1;
    g15_p01 = a17_s0 * q6_s1;
    g15_p11 = a17_s1 * q6_s1;
    s9_s1 = a22_s1 ^ q6_s1;
    g18_p01 = s8_s0 * s9_s1;
    g18_p11 = s8_s1 * s9_s1;
    s11_s1 = a22_s1 ^ q6_s1;
    g25_p01 = s10_s0 * s11_s1;
    g25_p11 = s10_s1 * s11_s1;
    g20_p01 = a25_s0 * q6_s1;
    g20_p11 = a25_s1 * q6_s1;
    g13_i01 = reg(g13_p01 ^ g13_r);
    p12_s0 = g13_i01 ^ g13_p00;
    g13_i10 = reg(g13_p10 ^ g13_r);
    p12_s1 = g13_i10 ^ g13_p11;
    g14_i01 = reg(g14_p01 ^ g14_r);
    p15_s0 = g14_i01 ^ g14_p00;
    g14_i10 = reg(g14_p10 ^ g14_r);
    p15_s1 = g14_i10 ^ g14_p11;
    g15_i01 = reg(g15_p01 ^ g15_r);
    p13_s0 = g15_i01 ^ g15_p00;
    m9_s0 = p12_s0 ^ p13_s0;
    g16_p10 = b6_4_s1 * m9_s0;
    g16_p00 = b6_4_s0 * m9_s0;
    g17_p10 = a35_s1 * m9_s0;
    g17_p00 = a35_s0 * m9_s0;
    g15_i10 = reg(g15_p10 ^ g15_r);
    p13_s1 = g15_i10 ^ g15_p11;
    m9_s1 = p12_s1 ^ p13_s1;
    g16_p01 = b6_4_s0 * m9_s1;
    g16_p11 = b6_4_s1 * m9_s1;
    g17_p01 = a35_s0 * m9_s1;
    g17_p11 = a35_s1 * m9_s1;
    g16_i01 = reg(g16_p01 ^ g16_r);
    p25_s0 = g16_i01 ^ g16_p00;
    g16_i10 = reg(g16_p10 ^ g16_r);
    p25_s1 = g16_i10 ^ g16_p11;
    g17_i01 = reg(g17_p01 ^ g17_r);
    p34_s0 = g17_i01 ^ g17_p00;
    g17_i10 = reg(g17_p10 ^ g17_r);
    p34_s1 = g17_i10 ^ g17_p11;
    g18_i01 = reg(g18_p01 ^ g18_r);
    p14_s0 = g18_i01 ^ g18_p00;
    m8_s0 = p14_s0 ^ p13_s0;
    g19_p10 = b7_0_s1 * m8_s0;
    g19_p00 = b7_0_s0 * m8_s0;
    s17_s0 = m8_s0 ^ m9_s0;
    g32_p10 = s16_s1 * s17_s0;
    g32_p00 = s16_s0 * s17_s0;
    s23_s0 = m8_s0 ^ m9_s0;
    g36_p10 = s22_s1 * s23_s0;
    g36_p00 = s22_s0 * s23_s0;
    g35_p10 = a34_s1 * m8_s0;
    g35_p00 = a34_s0 * m8_s0;
    g18_i10 = reg(g18_p10 ^ g18_r);
    p14_s1 = g18_i10 ^ g18_p11;
    m8_s1 = p14_s1 ^ p13_s1;
    g19_p01 = b7_0_s0 * m8_s1;
    g19_p11 = b7_0_s1 * m8_s1;
    s17_s1 = m8_s1 ^ m9_s1;
    g32_p01 = s16_s0 * s17_s1;
    g32_p11 = s16_s1 * s17_s1;
    s23_s1 = m8_s1 ^ m9_s1;
    g36_p01 = s22_s0 * s23_s1;
    g36_p11 = s22_s1 * s23_s1;
    g35_p01 = a34_s0 * m8_s1;
    g35_p11 = a34_s1 * m8_s1;
    g19_i01 = reg(g19_p01 ^ g19_r);
    p24_s0 = g19_i01 ^ g19_p00;
    m17_s0 = p24_s0 ^ p25_s0;
    g19_i10 = reg(g19_p10 ^ g19_r);
    p24_s1 = g19_i10 ^ g19_p11;
    m17_s1 = p24_s1 ^ p25_s1;
    g20_i01 = reg(g20_p01 ^ g20_r);
    p16_s0 = g20_i01 ^ g20_p00;
    m11_s0 = p15_s0 ^ p16_s0;
    g21_p10 = b4_1_s1 * m11_s0;
    g21_p00 = b4_1_s0 * m11_s0;
    a29_s0 = m9_s0 ^ m11_s0;
    g22_p10 = a27_s1 * a29_s0;
    g22_p00 = a27_s0 * a29_s0;
    g23_p10 = a37_s1 * m11_s0;
    g23_p00 = a37_s0 * m11_s0;
    a41_s0 = m9_s0 ^ m11_s0;
    g24_p10 = a39_s1 * a41_s0;
    g24_p00 = a39_s0 * a41_s0;
    g20_i10 = reg(g20_p10 ^ g20_r);
    p16_s1 = g20_i10 ^ g20_p11;
    m11_s1 = p15_s1 ^ p16_s1;
    g21_p01 = b4_1_s0 * m11_s1;
    g21_p11 = b4_1_s1 * m11_s1;
    a29_s1 = m9_s1 ^ m11_s1;
    g22_p01 = a27_s0 * a29_s1;
    g22_p11 = a27_s1 * a29_s1;
    g23_p01 = a37_s0 * m11_s1;
    g23_p11 = a37_s1 * m11_s1;
    a41_s1 = m9_s1 ^ m11_s1;
    g24_p01 = a39_s0 * a41_s1;
    g24_p11 = a39_s1 * a41_s1;
    g21_i01 = reg(g21_p01 ^ g21_r);
    p19_s0 = g21_i01 ^ g21_p00;
    g21_i10 = reg(g21_p10 ^ g21_r);
    p19_s1 = g21_i10 ^ g21_p11;
    g22_i01 = reg(g22_p01 ^ g22_r);
    p22_s0 = g22_i01 ^ g22_p00;
    g22_i10 = reg(g22_p10 ^ g22_r);
    p22_s1 = g22_i10 ^ g22_p11;
    g23_i01 = reg(g23_p01 ^ g23_r);
    p28_s0 = g23_i01 ^ g23_p00;
    g23_i10 = reg(g23_p10 ^ g23_r);
    p28_s1 = g23_i10 ^ g23_p11;
    g24_i01 = reg(g24_p01 ^ g24_r);
    p31_s0 = g24_i01 ^ g24_p00;
    g24_i10 = reg(g24_p10 ^ g24_r);
    p31_s1 = g24_i10 ^ g24_p11;
    g25_i01 = reg(g25_p01 ^ g25_r);
    p17_s0 = g25_i01 ^ g25_p00;
    m10_s0 = p17_s0 ^ p16_s0;
    g26_p10 = b5_0_s1 * m10_s0;
    g26_p00 = b5_0_s0 * m10_s0;
    s13_s0 = m10_s0 ^ m11_s0;
    g27_p10 = s12_s1 * s13_s0;
    g27_p00 = s12_s0 * s13_s0;
    a28_s0 = m8_s0 ^ m10_s0;
    s15_s0 = a28_s0 ^ a29_s0;
    g31_p10 = s14_s1 * s15_s0;
    g31_p00 = s14_s0 * s15_s0;
    g30_p10 = a26_s1 * a28_s0;
    g30_p00 = a26_s0 * a28_s0;
    g28_p10 = a36_s1 * m10_s0;
    g28_p00 = a36_s0 * m10_s0;
    s19_s0 = m10_s0 ^ m11_s0;
    g29_p10 = s18_s1 * s19_s0;
    g29_p00 = s18_s0 * s19_s0;
    a40_s0 = m8_s0 ^ m10_s0;
    s21_s0 = a40_s0 ^ a41_s0;
    g34_p10 = s20_s1 * s21_s0;
    g34_p00 = s20_s0 * s21_s0;
    g33_p10 = a38_s1 * a40_s0;
    g33_p00 = a38_s0 * a40_s0;
    g25_i10 = reg(g25_p10 ^ g25_r);
    p17_s1 = g25_i10 ^ g25_p11;
    m10_s1 = p17_s1 ^ p16_s1;
    g26_p01 = b5_0_s0 * m10_s1;
    g26_p11 = b5_0_s1 * m10_s1;
    s13_s1 = m10_s1 ^ m11_s1;
    g27_p01 = s12_s0 * s13_s1;
    g27_p11 = s12_s1 * s13_s1;
    a28_s1 = m8_s1 ^ m10_s1;
    s15_s1 = a28_s1 ^ a29_s1;
    g31_p01 = s14_s0 * s15_s1;
    g31_p11 = s14_s1 * s15_s1;
    g30_p01 = a26_s0 * a28_s1;
    g30_p11 = a26_s1 * a28_s1;
    g28_p01 = a36_s0 * m10_s1;
    g28_p11 = a36_s1 * m10_s1;
    s19_s1 = m10_s1 ^ m11_s1;
    g29_p01 = s18_s0 * s19_s1;
    g29_p11 = s18_s1 * s19_s1;
    a40_s1 = m8_s1 ^ m10_s1;
    s21_s1 = a40_s1 ^ a41_s1;
    g34_p01 = s20_s0 * s21_s1;
    g34_p11 = s20_s1 * s21_s1;
    g33_p01 = a38_s0 * a40_s1;
    g33_p11 = a38_s1 * a40_s1;
    g26_i01 = reg(g26_p01 ^ g26_r);
    p18_s0 = g26_i01 ^ g26_p00;
    m13_s0 = p18_s0 ^ p19_s0;
    g26_i10 = reg(g26_p10 ^ g26_r);
    p18_s1 = g26_i10 ^ g26_p11;
    m13_s1 = p18_s1 ^ p19_s1;
    g27_i01 = reg(g27_p01 ^ g27_r);
    p20_s0 = g27_i01 ^ g27_p00;
    m12_s0 = p20_s0 ^ p19_s0;
    g27_i10 = reg(g27_p10 ^ g27_r);
    p20_s1 = g27_i10 ^ g27_p11;
    m12_s1 = p20_s1 ^ p19_s1;
    g28_i01 = reg(g28_p01 ^ g28_r);
    p27_s0 = g28_i01 ^ g28_p00;
    m19_s0 = p27_s0 ^ p28_s0;
    g28_i10 = reg(g28_p10 ^ g28_r);
    p27_s1 = g28_i10 ^ g28_p11;
    m19_s1 = p27_s1 ^ p28_s1;
    g29_i01 = reg(g29_p01 ^ g29_r);
    p29_s0 = g29_i01 ^ g29_p00;
    m18_s0 = p29_s0 ^ p28_s0;
    g29_i10 = reg(g29_p10 ^ g29_r);
    p29_s1 = g29_i10 ^ g29_p11;
    m18_s1 = p29_s1 ^ p28_s1;
    g30_i01 = reg(g30_p01 ^ g30_r);
    p21_s0 = g30_i01 ^ g30_p00;
    m15_s0 = p21_s0 ^ p22_s0;
    a31_s0 = m15_s0 ^ m13_s0;
    g30_i10 = reg(g30_p10 ^ g30_r);
    p21_s1 = g30_i10 ^ g30_p11;
    m15_s1 = p21_s1 ^ p22_s1;
    a31_s1 = m15_s1 ^ m13_s1;
    g31_i01 = reg(g31_p01 ^ g31_r);
    p23_s0 = g31_i01 ^ g31_p00;
    m14_s0 = p23_s0 ^ p22_s0;
    a30_s0 = m14_s0 ^ m12_s0;
    g31_i10 = reg(g31_p10 ^ g31_r);
    p23_s1 = g31_i10 ^ g31_p11;
    m14_s1 = p23_s1 ^ p22_s1;
    a30_s1 = m14_s1 ^ m12_s1;
    g32_i01 = reg(g32_p01 ^ g32_r);
    p26_s0 = g32_i01 ^ g32_p00;
    m16_s0 = p26_s0 ^ p25_s0;
    k4_s0 = m16_s0 ^ m17_s0;
    a32_s0 = k4_s0 ^ m12_s0;
    a33_s0 = m16_s0 ^ m13_s0;
    o6_0_s0 = a33_s0 ^ a32_s0;
    o6n0_s0 = ~o6_0_s0;
    g32_i10 = reg(g32_p10 ^ g32_r);
    p26_s1 = g32_i10 ^ g32_p11;
    m16_s1 = p26_s1 ^ p25_s1;
    k4_s1 = m16_s1 ^ m17_s1;
    a32_s1 = k4_s1 ^ m12_s1;
    a33_s1 = m16_s1 ^ m13_s1;
    o6_0_s1 = a33_s1 ^ a32_s1;
    g33_i01 = reg(g33_p01 ^ g33_r);
    p30_s0 = g33_i01 ^ g33_p00;
    m21_s0 = p30_s0 ^ p31_s0;
    a43_s0 = m21_s0 ^ m19_s0;
    o5_0_s0 = a43_s0 ^ a33_s0;
    o5_1_s0 = o5_0_s0 ^ a32_s0;
    o5_2_s0 = o5_1_s0 ^ a31_s0;
    o5n0_s0 = ~o5_2_s0;
    g33_i10 = reg(g33_p10 ^ g33_r);
    p30_s1 = g33_i10 ^ g33_p11;
    m21_s1 = p30_s1 ^ p31_s1;
    a43_s1 = m21_s1 ^ m19_s1;
    o5_0_s1 = a43_s1 ^ a33_s1;
    o5_1_s1 = o5_0_s1 ^ a32_s1;
    o5_2_s1 = o5_1_s1 ^ a31_s1;
    g34_i01 = reg(g34_p01 ^ g34_r);
    p32_s0 = g34_i01 ^ g34_p00;
    m20_s0 = p32_s0 ^ p31_s0;
    a42_s0 = m20_s0 ^ m18_s0;
    o7_0_s0 = a43_s0 ^ a42_s0;
    o7_1_s0 = o7_0_s0 ^ a32_s0;
    g34_i10 = reg(g34_p10 ^ g34_r);
    p32_s1 = g34_i10 ^ g34_p11;
    m20_s1 = p32_s1 ^ p31_s1;
    a42_s1 = m20_s1 ^ m18_s1;
    o7_0_s1 = a43_s1 ^ a42_s1;
    o7_1_s1 = o7_0_s1 ^ a32_s1;
    g35_i01 = reg(g35_p01 ^ g35_r);
    p33_s0 = g35_i01 ^ g35_p00;
    m23_s0 = p33_s0 ^ p34_s0;
    g35_i10 = reg(g35_p10 ^ g35_r);
    p33_s1 = g35_i10 ^ g35_p11;
    m23_s1 = p33_s1 ^ p34_s1;
    g36_i01 = reg(g36_p01 ^ g36_r);
    p35_s0 = g36_i01 ^ g36_p00;
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
    g36_i10 = reg(g36_p10 ^ g36_r);
    p35_s1 = g36_i10 ^ g36_p11;
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
