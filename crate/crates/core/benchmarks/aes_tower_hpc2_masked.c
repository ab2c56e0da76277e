int aes_sbox(bool x0_s0, bool x0_s1, bool x1_s0, bool x1_s1, bool x2_s0, bool x2_s1, bool x3_s0, bool x3_s1, bool x4_s0, bool x4_s1, bool x5_s0, bool x5_s1, bool x6_s0, bool x6_s1, bool x7_s0, bool x7_s1, bool g1_r, bool g2_r, bool g3_r, bool g4_r, bool g5_r, bool g6_r, bool g7_r, bool g8_r, bool g9_r, bool g10_r, bool g11_r, bool g12_r, bool g13_r, bool g14_r, bool g15_r, bool g16_r, bool g17_r, bool g18_r, bool g19_r, bool g20_r, bool g21_r, bool g22_r, bool g23_r, bool g24_r, bool g25_r, bool g26_r, bool g27_r, bool g28_r, bool g29_r, bool g30_r, bool g31_r, bool g32_r, bool g33_r, bool g34_r, bool g35_r, bool g36_r, bool *y0_s0, bool *y0_s1, bool *y1_s0, bool *y1_s1, bool *y2_s0, bool *y2_s1, bool *y3_s0, bool *y3_s1, bool *y4_s0, bool *y4_s1, bool *y5_s0, bool *y5_s1, bool *y6_s0, bool *y6_s1, bool *y7_s0, bool *y7_s1)
{
    b0_0_s0 = x0_s0 ^ x1_s0;
    b0_0_s1 = x0_s1 ^ x1_s1;
    b6_0_s0 = x1_s0 ^ x2_s0;
    b6_0_s1 = x1_s1 ^ x2_s1;
    b2_0_s0 = x2_s0 ^ x3_s0;
    b5_0_s0 = x2_s0 ^ x3_s0;
    g1_na0 = ~b5_0_s0;
    g26_na0 = ~b5_0_s0;
    b6_1_s0 = b6_0_s0 ^ x3_s0;
    b2_0_s1 = x2_s1 ^ x3_s1;
    b5_0_s1 = x2_s1 ^ x3_s1;
    g1_na1 = ~b5_0_s1;
    g26_na1 = ~b5_0_s1;
    b6_1_s1 = b6_0_s1 ^ x3_s1;
    b1_0_s0 = x2_s0 ^ x4_s0;
    b2_1_s0 = b2_0_s0 ^ x4_s0;
    b6_2_s0 = b6_1_s0 ^ x4_s0;
    b1_0_s1 = x2_s1 ^ x4_s1;
    b2_1_s1 = b2_0_s1 ^ x4_s1;
    b6_2_s1 = b6_1_s1 ^ x4_s1;
    b1_1_s0 = b1_0_s0 ^ x5_s0;
    g1_p00 = b5_0_s0 * b1_1_s0;
    s1_s0 = b1_1_s0 ^ b0_0_s0;
    q3_s0 = b1_1_s0 ^ b0_0_s0;
    a36_s0 = b5_0_s0 ^ b1_1_s0;
    g28_na0 = ~a36_s0;
    b3_0_s0 = x3_s0 ^ x5_s0;
    b4_0_s0 = x4_s0 ^ x5_s0;
    b1_1_s1 = b1_0_s1 ^ x5_s1;
    g1_p11 = b5_0_s1 * b1_1_s1;
    s1_s1 = b1_1_s1 ^ b0_0_s1;
    q3_s1 = b1_1_s1 ^ b0_0_s1;
    a36_s1 = b5_0_s1 ^ b1_1_s1;
    g28_na1 = ~a36_s1;
    b3_0_s1 = x3_s1 ^ x5_s1;
    b4_0_s1 = x4_s1 ^ x5_s1;
    b3_1_s0 = b3_0_s0 ^ x6_s0;
    a4_s0 = b3_1_s0 ^ b1_1_s0;
    a15_s0 = b3_1_s0 ^ q3_s0;
    b4_1_s0 = b4_0_s0 ^ x6_s0;
    q1_s0 = b5_0_s0 ^ b4_1_s0;
    g2_na0 = ~b4_1_s0;
    g2_p00 = b4_1_s0 * b0_0_s0;
    s0_s0 = b5_0_s0 ^ b4_1_s0;
    g3_na0 = ~s0_s0;
    g3_p00 = s0_s0 * s1_s0;
    s12_s0 = b5_0_s0 ^ b4_1_s0;
    g27_na0 = ~s12_s0;
    a37_s0 = b4_1_s0 ^ b0_0_s0;
    s18_s0 = a36_s0 ^ a37_s0;
    g29_na0 = ~s18_s0;
    g23_na0 = ~a37_s0;
    g21_na0 = ~b4_1_s0;
    b6_3_s0 = b6_2_s0 ^ x6_s0;
    b3_1_s1 = b3_0_s1 ^ x6_s1;
    a4_s1 = b3_1_s1 ^ b1_1_s1;
    a15_s1 = b3_1_s1 ^ q3_s1;
    b4_1_s1 = b4_0_s1 ^ x6_s1;
    q1_s1 = b5_0_s1 ^ b4_1_s1;
    g2_na1 = ~b4_1_s1;
    g2_p11 = b4_1_s1 * b0_0_s1;
    s0_s1 = b5_0_s1 ^ b4_1_s1;
    g3_na1 = ~s0_s1;
    g3_p11 = s0_s1 * s1_s1;
    s12_s1 = b5_0_s1 ^ b4_1_s1;
    g27_na1 = ~s12_s1;
    a37_s1 = b4_1_s1 ^ b0_0_s1;
    s18_s1 = a36_s1 ^ a37_s1;
    g29_na1 = ~s18_s1;
    g23_na1 = ~a37_s1;
    g21_na1 = ~b4_1_s1;
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
    g4_na0 = ~a3_s0;
    g4_p00 = a3_s0 * a5_s0;
    g5_na0 = ~b6_4_s0;
    g5_p00 = b6_4_s0 * b2_2_s0;
    a27_s0 = b6_4_s0 ^ b4_1_s0;
    g22_na0 = ~a27_s0;
    a35_s0 = b6_4_s0 ^ b2_2_s0;
    a39_s0 = a35_s0 ^ a37_s0;
    g24_na0 = ~a39_s0;
    g17_na0 = ~a35_s0;
    g16_na0 = ~b6_4_s0;
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
    g6_na0 = ~a2_s0;
    g6_p00 = a2_s0 * a4_s0;
    s2_s0 = a2_s0 ^ a3_s0;
    g7_na0 = ~s2_s0;
    g7_p00 = s2_s0 * s3_s0;
    g8_na0 = ~b7_0_s0;
    g8_p00 = b7_0_s0 * b3_1_s0;
    s4_s0 = b7_0_s0 ^ b6_4_s0;
    g9_na0 = ~s4_s0;
    g9_p00 = s4_s0 * s5_s0;
    g19_na0 = ~b7_0_s0;
    a26_s0 = b7_0_s0 ^ b5_0_s0;
    g30_na0 = ~a26_s0;
    s14_s0 = a26_s0 ^ a27_s0;
    g31_na0 = ~s14_s0;
    s16_s0 = b7_0_s0 ^ b6_4_s0;
    g32_na0 = ~s16_s0;
    a34_s0 = b7_0_s0 ^ b3_1_s0;
    a38_s0 = a34_s0 ^ a36_s0;
    g33_na0 = ~a38_s0;
    s20_s0 = a38_s0 ^ a39_s0;
    g34_na0 = ~s20_s0;
    g35_na0 = ~a34_s0;
    s22_s0 = a34_s0 ^ a35_s0;
    g36_na0 = ~s22_s0;
    b2_2_s1 = b2_1_s1 ^ x7_s1;
    a5_s1 = b2_2_s1 ^ b0_0_s1;
    s3_s1 = a4_s1 ^ a5_s1;
    s5_s1 = b3_1_s1 ^ b2_2_s1;
    q2_s1 = b3_1_s1 ^ b2_2_s1;
    k2_s1 = b3_1_s1 ^ q2_s1;
    a14_s1 = k2_s1 ^ b1_1_s1;
    b6_4_s1 = b6_3_s1 ^ x7_s1;
    a3_s1 = b6_4_s1 ^ b4_1_s1;
    g4_na1 = ~a3_s1;
    g4_p11 = a3_s1 * a5_s1;
    g5_na1 = ~b6_4_s1;
    g5_p11 = b6_4_s1 * b2_2_s1;
    a27_s1 = b6_4_s1 ^ b4_1_s1;
    g22_na1 = ~a27_s1;
    a35_s1 = b6_4_s1 ^ b2_2_s1;
    a39_s1 = a35_s1 ^ a37_s1;
    g24_na1 = ~a39_s1;
    g17_na1 = ~a35_s1;
    g16_na1 = ~b6_4_s1;
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
    g6_na1 = ~a2_s1;
    g6_p11 = a2_s1 * a4_s1;
    s2_s1 = a2_s1 ^ a3_s1;
    g7_na1 = ~s2_s1;
    g7_p11 = s2_s1 * s3_s1;
    g8_na1 = ~b7_0_s1;
    g8_p11 = b7_0_s1 * b3_1_s1;
    s4_s1 = b7_0_s1 ^ b6_4_s1;
    g9_na1 = ~s4_s1;
    g9_p11 = s4_s1 * s5_s1;
    g19_na1 = ~b7_0_s1;
    a26_s1 = b7_0_s1 ^ b5_0_s1;
    g30_na1 = ~a26_s1;
    s14_s1 = a26_s1 ^ a27_s1;
    g31_na1 = ~s14_s1;
    s16_s1 = b7_0_s1 ^ b6_4_s1;
    g32_na1 = ~s16_s1;
    a34_s1 = b7_0_s1 ^ b3_1_s1;
    a38_s1 = a34_s1 ^ a36_s1;
    g33_na1 = ~a38_s1;
    s20_s1 = a38_s1 ^ a39_s1;
    g34_na1 = ~s20_s1;
    g35_na1 = ~a34_s1;
    s22_s1 = a34_s1 ^ a35_s1;
    g36_na1 = ~s22_s1;
    g1_u0 = reg(b1_1_s1 ^ g1_r);
    g1_t0 = reg(b5_0_s0 * g1_u0);
    g1_u1 = reg(b1_1_s0 ^ g1_r);
    g1_t1 = reg(b5_0_s1 * g1_u1);
    g1_v0 = reg(g1_na0 * g1_r);
    g1_s0 = g1_v0 ^ g1_t0;
    p0_s0 = g1_p00 ^ g1_s0;
    g1_v1 = reg(g1_na1 * g1_r);
    g1_s1 = g1_v1 ^ g1_t1;
    p0_s1 = g1_p11 ^ g1_s1;
    g2_u0 = reg(b0_0_s1 ^ g2_r);
    g2_t0 = reg(b4_1_s0 * g2_u0);
    g2_u1 = reg(b0_0_s0 ^ g2_r);
    g2_t1 = reg(b4_1_s1 * g2_u1);
    g2_v0 = reg(g2_na0 * g2_r);
    g2_s0 = g2_v0 ^ g2_t0;
    p1_s0 = g2_p00 ^ g2_s0;
    m1_s0 = p0_s0 ^ p1_s0;
    g2_v1 = reg(g2_na1 * g2_r);
    g2_s1 = g2_v1 ^ g2_t1;
    p1_s1 = g2_p11 ^ g2_s1;
    m1_s1 = p0_s1 ^ p1_s1;
    g3_u0 = reg(s1_s1 ^ g3_r);
    g3_t0 = reg(s0_s0 * g3_u0);
    g3_u1 = reg(s1_s0 ^ g3_r);
    g3_t1 = reg(s0_s1 * g3_u1);
    g3_v0 = reg(g3_na0 * g3_r);
    g3_s0 = g3_v0 ^ g3_t0;
    p2_s0 = g3_p00 ^ g3_s0;
    m0_s0 = p2_s0 ^ p1_s0;
    g3_v1 = reg(g3_na1 * g3_r);
    g3_s1 = g3_v1 ^ g3_t1;
    p2_s1 = g3_p11 ^ g3_s1;
    m0_s1 = p2_s1 ^ p1_s1;
    g4_u0 = reg(a5_s1 ^ g4_r);
    g4_t0 = reg(a3_s0 * g4_u0);
    g4_u1 = reg(a5_s0 ^ g4_r);
    g4_t1 = reg(a3_s1 * g4_u1);
    g4_v0 = reg(g4_na0 * g4_r);
    g4_s0 = g4_v0 ^ g4_t0;
    p4_s0 = g4_p00 ^ g4_s0;
    g4_v1 = reg(g4_na1 * g4_r);
    g4_s1 = g4_v1 ^ g4_t1;
    p4_s1 = g4_p11 ^ g4_s1;
    g5_u0 = reg(b2_2_s1 ^ g5_r);
    g5_t0 = reg(b6_4_s0 * g5_u0);
    g5_u1 = reg(b2_2_s0 ^ g5_r);
    g5_t1 = reg(b6_4_s1 * g5_u1);
    g5_v0 = reg(g5_na0 * g5_r);
    g5_s0 = g5_v0 ^ g5_t0;
    p7_s0 = g5_p00 ^ g5_s0;
    g5_v1 = reg(g5_na1 * g5_r);
    g5_s1 = g5_v1 ^ g5_t1;
    p7_s1 = g5_p11 ^ g5_s1;
    g6_u0 = reg(a4_s1 ^ g6_r);
    g6_t0 = reg(a2_s0 * g6_u0);
    g6_u1 = reg(a4_s0 ^ g6_r);
    g6_t1 = reg(a2_s1 * g6_u1);
    g6_v0 = reg(g6_na0 * g6_r);
    g6_s0 = g6_v0 ^ g6_t0;
    p3_s0 = g6_p00 ^ g6_s0;
    m3_s0 = p3_s0 ^ p4_s0;
    a7_s0 = m3_s0 ^ m1_s0;
    a11_s0 = l3_s0 ^ a7_s0;
    a17_s0 = a11_s0 ^ q2_s0;
    g11_na0 = ~a17_s0;
    g15_na0 = ~a17_s0;
    g6_v1 = reg(g6_na1 * g6_r);
    g6_s1 = g6_v1 ^ g6_t1;
    p3_s1 = g6_p11 ^ g6_s1;
    m3_s1 = p3_s1 ^ p4_s1;
    a7_s1 = m3_s1 ^ m1_s1;
    a11_s1 = l3_s1 ^ a7_s1;
    a17_s1 = a11_s1 ^ q2_s1;
    g11_na1 = ~a17_s1;
    g15_na1 = ~a17_s1;
    g7_u0 = reg(s3_s1 ^ g7_r);
    g7_t0 = reg(s2_s0 * g7_u0);
    g7_u1 = reg(s3_s0 ^ g7_r);
    g7_t1 = reg(s2_s1 * g7_u1);
    g7_v0 = reg(g7_na0 * g7_r);
    g7_s0 = g7_v0 ^ g7_t0;
    p5_s0 = g7_p00 ^ g7_s0;
    m2_s0 = p5_s0 ^ p4_s0;
    a6_s0 = m2_s0 ^ m0_s0;
    a10_s0 = l2_s0 ^ a6_s0;
    a16_s0 = a10_s0 ^ b3_1_s0;
    q4_s0 = a16_s0 ^ a17_s0;
    k3_s0 = a16_s0 ^ q4_s0;
    s6_s0 = a16_s0 ^ a17_s0;
    g12_na0 = ~s6_s0;
    s8_s0 = a16_s0 ^ a17_s0;
    g18_na0 = ~s8_s0;
    g10_na0 = ~a16_s0;
    g13_na0 = ~a16_s0;
    g7_v1 = reg(g7_na1 * g7_r);
    g7_s1 = g7_v1 ^ g7_t1;
    p5_s1 = g7_p11 ^ g7_s1;
    m2_s1 = p5_s1 ^ p4_s1;
    a6_s1 = m2_s1 ^ m0_s1;
    a10_s1 = l2_s1 ^ a6_s1;
    a16_s1 = a10_s1 ^ b3_1_s1;
    q4_s1 = a16_s1 ^ a17_s1;
    k3_s1 = a16_s1 ^ q4_s1;
    s6_s1 = a16_s1 ^ a17_s1;
    g12_na1 = ~s6_s1;
    s8_s1 = a16_s1 ^ a17_s1;
    g18_na1 = ~s8_s1;
    g10_na1 = ~a16_s1;
    g13_na1 = ~a16_s1;
    g8_u0 = reg(b3_1_s1 ^ g8_r);
    g8_t0 = reg(b7_0_s0 * g8_u0);
    g8_u1 = reg(b3_1_s0 ^ g8_r);
    g8_t1 = reg(b7_0_s1 * g8_u1);
    g8_v0 = reg(g8_na0 * g8_r);
    g8_s0 = g8_v0 ^ g8_t0;
    p6_s0 = g8_p00 ^ g8_s0;
    m5_s0 = p6_s0 ^ p7_s0;
    g8_v1 = reg(g8_na1 * g8_r);
    g8_s1 = g8_v1 ^ g8_t1;
    p6_s1 = g8_p11 ^ g8_s1;
    m5_s1 = p6_s1 ^ p7_s1;
    g9_u0 = reg(s5_s1 ^ g9_r);
    g9_t0 = reg(s4_s0 * g9_u0);
    g9_u1 = reg(s5_s0 ^ g9_r);
    g9_t1 = reg(s4_s1 * g9_u1);
    g9_v0 = reg(g9_na0 * g9_r);
    g9_s0 = g9_v0 ^ g9_t0;
    p8_s0 = g9_p00 ^ g9_s0;
    m4_s0 = p8_s0 ^ p7_s0;
    k1_s0 = m4_s0 ^ m5_s0;
    a8_s0 = k1_s0 ^ m0_s0;
    a12_s0 = q0_s0 ^ a8_s0;
    a18_s0 = a12_s0 ^ a14_s0;
    g10_p00 = a16_s0 * a18_s0;
    a24_s0 = a16_s0 ^ a18_s0;
    g14_na0 = ~a24_s0;
    a9_s0 = m4_s0 ^ m1_s0;
    a13_s0 = l4_s0 ^ a9_s0;
    a19_s0 = a13_s0 ^ a15_s0;
    g11_p00 = a17_s0 * a19_s0;
    s7_s0 = a18_s0 ^ a19_s0;
    g12_p00 = s6_s0 * s7_s0;
    q5_s0 = a18_s0 ^ a19_s0;
    a25_s0 = a17_s0 ^ a19_s0;
    g20_na0 = ~a25_s0;
    s10_s0 = a24_s0 ^ a25_s0;
    g25_na0 = ~s10_s0;
    g9_v1 = reg(g9_na1 * g9_r);
    g9_s1 = g9_v1 ^ g9_t1;
    p8_s1 = g9_p11 ^ g9_s1;
    m4_s1 = p8_s1 ^ p7_s1;
    k1_s1 = m4_s1 ^ m5_s1;
    a8_s1 = k1_s1 ^ m0_s1;
    a12_s1 = q0_s1 ^ a8_s1;
    a18_s1 = a12_s1 ^ a14_s1;
    g10_p11 = a16_s1 * a18_s1;
    a24_s1 = a16_s1 ^ a18_s1;
    g14_na1 = ~a24_s1;
    a9_s1 = m4_s1 ^ m1_s1;
    a13_s1 = l4_s1 ^ a9_s1;
    a19_s1 = a13_s1 ^ a15_s1;
    g11_p11 = a17_s1 * a19_s1;
    s7_s1 = a18_s1 ^ a19_s1;
    g12_p11 = s6_s1 * s7_s1;
    q5_s1 = a18_s1 ^ a19_s1;
    a25_s1 = a17_s1 ^ a19_s1;
    g20_na1 = ~a25_s1;
    s10_s1 = a24_s1 ^ a25_s1;
    g25_na1 = ~s10_s1;
    g10_u0 = reg(a18_s1 ^ g10_r);
    g10_t0 = reg(a16_s0 * g10_u0);
    g10_u1 = reg(a18_s0 ^ g10_r);
    g10_t1 = reg(a16_s1 * g10_u1);
    g10_v0 = reg(g10_na0 * g10_r);
    g10_s0 = g10_v0 ^ g10_t0;
    p9_s0 = g10_p00 ^ g10_s0;
    g10_v1 = reg(g10_na1 * g10_r);
    g10_s1 = g10_v1 ^ g10_t1;
    p9_s1 = g10_p11 ^ g10_s1;
    g11_u0 = reg(a19_s1 ^ g11_r);
    g11_t0 = reg(a17_s0 * g11_u0);
    g11_u1 = reg(a19_s0 ^ g11_r);
    g11_t1 = reg(a17_s1 * g11_u1);
    g11_v0 = reg(g11_na0 * g11_r);
    g11_s0 = g11_v0 ^ g11_t0;
    p10_s0 = g11_p00 ^ g11_s0;
    m7_s0 = p9_s0 ^ p10_s0;
    a21_s0 = a16_s0 ^ m7_s0;
    a23_s0 = a21_s0 ^ q5_s0;
    g11_v1 = reg(g11_na1 * g11_r);
    g11_s1 = g11_v1 ^ g11_t1;
    p10_s1 = g11_p11 ^ g11_s1;
    m7_s1 = p9_s1 ^ p10_s1;
    a21_s1 = a16_s1 ^ m7_s1;
    a23_s1 = a21_s1 ^ q5_s1;
    g12_u0 = reg(s7_s1 ^ g12_r);
    g12_t0 = reg(s6_s0 * g12_u0);
    g12_u1 = reg(s7_s0 ^ g12_r);
    g12_t1 = reg(s6_s1 * g12_u1);
    g12_v0 = reg(g12_na0 * g12_r);
    g12_s0 = g12_v0 ^ g12_t0;
    p11_s0 = g12_p00 ^ g12_s0;
    m6_s0 = p11_s0 ^ p10_s0;
    a20_s0 = k3_s0 ^ m6_s0;
    a22_s0 = a20_s0 ^ a18_s0;
    g13_p00 = a16_s0 * a22_s0;
    g14_p00 = a24_s0 * a22_s0;
    q6_s0 = a22_s0 ^ a23_s0;
    g15_p00 = a17_s0 * q6_s0;
    s9_s0 = a22_s0 ^ q6_s0;
    g18_p00 = s8_s0 * s9_s0;
    s11_s0 = a22_s0 ^ q6_s0;
    g25_p00 = s10_s0 * s11_s0;
    g20_p00 = a25_s0 * q6_s0;
    g12_v1 = reg(g12_na1 * g12_r);
    g12_s1 = g12_v1 ^ g12_t1;
    p11_s1 = g12_p11 ^ g12_s1;
    m6_s1 = p11_s1 ^ p10_s1;
    a20_s1 = k3_s1 ^ m6_s1;
    a22_s1 = a20_s1 ^ a18_s1;
    g13_p11 = a16_s1 * a22_s1;
    g14_p11 = a24_s1 * a22_s1;
    q6_s1 = a22_s1 ^ a23_s1;
    g15_p11 = a17_s1 * q6_s1;
    s9_s1 = a22_s1 ^ q6_s1;
    g18_p11 = s8_s1 * s9_s1;
    s11_s1 = a22_s1 ^ q6_s1;
    g25_p11 = s10_s1 * s11_s1;
    g20_p11 = a25_s1 * q6_s1;
    g13_u0 = reg(a22_s1 ^ g13_r);
    g13_t0 = reg(a16_s0 * g13_u0);
    g13_u1 = reg(a22_s0 ^ g13_r);
    g13_t1 = reg(a16_s1 * g13_u1);
    g13_v0 = reg(g13_na0 * g13_r);
    g13_s0 = g13_v0 ^ g13_t0;
    p12_s0 = g13_p00 ^ g13_s0;
    g13_v1 = reg(g13_na1 * g13_r);
    g13_s1 = g13_v1 ^ g13_t1;
    p12_s1 = g13_p11 ^ g13_s1;
    g14_u0 = reg(a22_s1 ^ g14_r);
    g14_t0 = reg(a24_s0 * g14_u0);
    g14_u1 = reg(a22_s0 ^ g14_r);
    g14_t1 = reg(a24_s1 * g14_u1);
    g14_v0 = reg(g14_na0 * g14_r);
    g14_s0 = g14_v0 ^ g14_t0;
    p15_s0 = g14_p00 ^ g14_s0;
    g14_v1 = reg(g14_na1 * g14_r);
    g14_s1 = g14_v1 ^ g14_t1;
    p15_s1 = g14_p11 ^ g14_s1;
    g15_u0 = reg(q6_s1 ^ g15_r);
    g15_t0 = reg(a17_s0 * g15_u0);
    g15_u1 = reg(q6_s0 ^ g15_r);
    g15_t1 = reg(a17_s1 * g15_u1);
    g15_v0 = reg(g15_na0 * g15_r);
    g15_s0 = g15_v0 ^ g15_t0;
    p13_s0 = g15_p00 ^ g15_s0;
    m9_s0 = p12_s0 ^ p13_s0;
    g16_p00 = b6_4_s0 * m9_s0;
    g17_p00 = a35_s0 * m9_s0;
    g15_v1 = reg(g15_na1 * g15_r);
    g15_s1 = g15_v1 ^ g15_t1;
    p13_s1 = g15_p11 ^ g15_s1;
    m9_s1 = p12_s1 ^ p13_s1;
    g16_p11 = b6_4_s1 * m9_s1;
    g17_p11 = a35_s1 * m9_s1;
    g16_u0 = reg(m9_s1 ^ g16_r);
    g16_t0 = reg(b6_4_s0 * g16_u0);
    g16_u1 = reg(m9_s0 ^ g16_r);
    g16_t1 = reg(b6_4_s1 * g16_u1);
    g16_v0 = reg(g16_na0 * g16_r);
    g16_s0 = g16_v0 ^ g16_t0;
    p25_s0 = g16_p00 ^ g16_s0;
    g16_v1 = reg(g16_na1 * g16_r);
    g16_s1 = g16_v1 ^ g16_t1;
    p25_s1 = g16_p11 ^ g16_s1;
    g17_u0 = reg(m9_s1 ^ g17_r);
    g17_t0 = reg(a35_s0 * g17_u0);
    g17_u1 = reg(m9_s0 ^ g17_r);
    g17_t1 = reg(a35_s1 * g17_u1);
    g17_v0 = reg(g17_na0 * g17_r);
    g17_s0 = g17_v0 ^ g17_t0;
    p34_s0 = g17_p00 ^ g17_s0;
    g17_v1 = reg(g17_na1 * g17_r);
    g17_s1 = g17_v1 ^ g17_t1;
    p34_s1 = g17_p11 ^ g17_s1;
    g18_u0 = reg(s9_s1 ^ g18_r);
    g18_t0 = reg(s8_s0 * g18_u0);
    g18_u1 = reg(s9_s0 ^ g18_r);
    g18_t1 = reg(s8_s1 * g18_u1);
    g18_v0 = reg(g18_na0 * g18_r);
    g18_s0 = g18_v0 ^ g18_t0;
    p14_s0 = g18_p00 ^ g18_s0;
    m8_s0 = p14_s0 ^ p13_s0;
    g19_p00 = b7_0_s0 * m8_s0;
    s17_s0 = m8_s0 ^ m9_s0;
    g32_p00 = s16_s0 * s17_s0;
    s23_s0 = m8_s0 ^ m9_s0;
    g36_p00 = s22_s0 * s23_s0;
    g35_p00 = a34_s0 * m8_s0;
    g18_v1 = reg(g18_na1 * g18_r);
    g18_s1 = g18_v1 ^ g18_t1;
    p14_s1 = g18_p11 ^ g18_s1;
    m8_s1 = p14_s1 ^ p13_s1;
    g19_p11 = b7_0_s1 * m8_s1;
    s17_s1 = m8_s1 ^ m9_s1;
    g32_p11 = s16_s1 * s17_s1;
    s23_s1 = m8_s1 ^ m9_s1;
    g36_p11 = s22_s1 * s23_s1;
    g35_p11 = a34_s1 * m8_s1;
    g19_u0 = reg(m8_s1 ^ g19_r);
    g19_t0 = reg(b7_0_s0 * g19_u0);
    g19_u1 = reg(m8_s0 ^ g19_r);
    g19_t1 = reg(b7_0_s1 * g19_u1);
    g19_v0 = reg(g19_na0 * g19_r);
    g19_s0 = g19_v0 ^ g19_t0;
    p24_s0 = g19_p00 ^ g19_s0;
    m17_s0 = p24_s0 ^ p25_s0;
    g19_v1 = reg(g19_na1 * g19_r);
    g19_s1 = g19_v1 ^ g19_t1;
    p24_s1 = g19_p11 ^ g19_s1;
    m17_s1 = p24_s1 ^ p25_s1;
    g20_u0 = reg(q6_s1 ^ g20_r);
    g20_t0 = reg(a25_s0 * g20_u0);
    g20_u1 = reg(q6_s0 ^ g20_r);
    g20_t1 = reg(a25_s1 * g20_u1);
    g20_v0 = reg(g20_na0 * g20_r);
    g20_s0 = g20_v0 ^ g20_t0;
    p16_s0 = g20_p00 ^ g20_s0;
    m11_s0 = p15_s0 ^ p16_s0;
    g21_p00 = b4_1_s0 * m11_s0;
    a29_s0 = m9_s0 ^ m11_s0;
    g22_p00 = a27_s0 * a29_s0;
    g23_p00 = a37_s0 * m11_s0;
    a41_s0 = m9_s0 ^ m11_s0;
    g24_p00 = a39_s0 * a41_s0;
    g20_v1 = reg(g20_na1 * g20_r);
    g20_s1 = g20_v1 ^ g20_t1;
    p16_s1 = g20_p11 ^ g20_s1;
    m11_s1 = p15_s1 ^ p16_s1;
    g21_p11 = b4_1_s1 * m11_s1;
    a29_s1 = m9_s1 ^ m11_s1;
    g22_p11 = a27_s1 * a29_s1;
    g23_p11 = a37_s1 * m11_s1;
    a41_s1 = m9_s1 ^ m11_s1;
    g24_p11 = a39_s1 * a41_s1;
    g21_u0 = reg(m11_s1 ^ g21_r);
    g21_t0 = reg(b4_1_s0 * g21_u0);
    g21_u1 = reg(m11_s0 ^ g21_r);
    g21_t1 = reg(b4_1_s1 * g21_u1);
    g21_v0 = reg(g21_na0 * g21_r);
    g21_s0 = g21_v0 ^ g21_t0;
    p19_s0 = g21_p00 ^ g21_s0;
    g21_v1 = reg(g21_na1 * g21_r);
    g21_s1 = g21_v1 ^ g21_t1;
    p19_s1 = g21_p11 ^ g21_s1;
    g22_u0 = reg(a29_s1 ^ g22_r);
    g22_t0 = reg(a27_s0 * g22_u0);
    g22_u1 = reg(a29_s0 ^ g22_r);
    g22_t1 = reg(a27_s1 * g22_u1);
    g22_v0 = reg(g22_na0 * g22_r);
    g22_s0 = g22_v0 ^ g22_t0;
    p22_s0 = g22_p00 ^ g22_s0;
    g22_v1 = reg(g22_na1 * g22_r);
    g22_s1 = g22_v1 ^ g22_t1;
    p22_s1 = g22_p11 ^ g22_s1;
    g23_u0 = reg(m11_s1 ^ g23_r);
    g23_t0 = reg(a37_s0 * g23_u0);
    g23_u1 = reg(m11_s0 ^ g23_r);
    g23_t1 = reg(a37_s1 * g23_u1);
    g23_v0 = reg(g23_na0 * g23_r);
    g23_s0 = g23_v0 ^ g23_t0;
    p28_s0 = g23_p00 ^ g23_s0;
    g23_v1 = reg(g23_na1 * g23_r);
    g23_s1 = g23_v1 ^ g23_t1;
    p28_s1 = g23_p11 ^ g23_s1;
    g24_u0 = reg(a41_s1 ^ g24_r);
    g24_t0 = reg(a39_s0 * g24_u0);
    g24_u1 = reg(a41_s0 ^ g24_r);
    g24_t1 = reg(a39_s1 * g24_u1);
    g24_v0 = reg(g24_na0 * g24_r);
    g24_s0 = g24_v0 ^ g24_t0;
    p31_s0 = g24_p00 ^ g24_s0;
    g24_v1 = reg(g24_na1 * g24_r);
    g24_s1 = g24_v1 ^ g24_t1;
    p31_s1 = g24_p11 ^ g24_s1;
    g25_u0 = reg(s11_s1 ^ g25_r);
    g25_t0 = reg(s10_s0 * g25_u0);
    g25_u1 = reg(s11_s0 ^ g25_r);
    g25_t1 = reg(s10_s1 * g25_u1);
    g25_v0 = reg(g25_na0 * g25_r);
    g25_s0 = g25_v0 ^ g25_t0;
    p17_s0 = g25_p00 ^ g25_s0;
    m10_s0 = p17_s0 ^ p16_s0;
    g26_p00 = b5_0_s0 * m10_s0;
    s13_s0 = m10_s0 ^ m11_s0;
    g27_p00 = s12_s0 * s13_s0;
    a28_s0 = m8_s0 ^ m10_s0;
    s15_s0 = a28_s0 ^ a29_s0;
    g31_p00 = s14_s0 * s15_s0;
    g30_p00 = a26_s0 * a28_s0;
    g28_p00 = a36_s0 * m10_s0;
    s19_s0 = m10_s0 ^ m11_s0;
    g29_p00 = s18_s0 * s19_s0;
    a40_s0 = m8_s0 ^ m10_s0;
    s21_s0 = a40_s0 ^ a41_s0;
    g34_p00 = s20_s0 * s21_s0;
    g33_p00 = a38_s0 * a40_s0;
    g25_v1 = reg(g25_na1 * g25_r);
    g25_s1 = g25_v1 ^ g25_t1;
    p17_s1 = g25_p11 ^ g25_s1;
    m10_s1 = p17_s1 ^ p16_s1;
    g26_p11 = b5_0_s1 * m10_s1;
    s13_s1 = m10_s1 ^ m11_s1;
    g27_p11 = s12_s1 * s13_s1;
    a28_s1 = m8_s1 ^ m10_s1;
    s15_s1 = a28_s1 ^ a29_s1;
    g31_p11 = s14_s1 * s15_s1;
    g30_p11 = a26_s1 * a28_s1;
    g28_p11 = a36_s1 * m10_s1;
    s19_s1 = m10_s1 ^ m11_s1;
    g29_p11 = s18_s1 * s19_s1;
    a40_s1 = m8_s1 ^ m10_s1;
    s21_s1 = a40_s1 ^ a41_s1;
    g34_p11 = s20_s1 * s21_s1;
    g33_p11 = a38_s1 * a40_s1;
    g26_u0 = reg(m10_s1 ^ g26_r);
    g26_t0 = reg(b5_0_s0 * g26_u0);
    g26_u1 = reg(m10_s0 ^ g26_r);
    g26_t1 = reg(b5_0_s1 * g26_u1);
    g26_v0 = reg(g26_na0 * g26_r);
    g26_s0 = g26_v0 ^ g26_t0;
    p18_s0 = g26_p00 ^ g26_s0;
    m13_s0 = p18_s0 ^ p19_s0;
    g26_v1 = reg(g26_na1 * g26_r);
    g26_s1 = g26_v1 ^ g26_t1;
    p18_s1 = g26_p11 ^ g26_s1;
    m13_s1 = p18_s1 ^ p19_s1;
    g27_u0 = reg(s13_s1 ^ g27_r);
    g27_t0 = reg(s12_s0 * g27_u0);
    g27_u1 = reg(s13_s0 ^ g27_r);
    g27_t1 = reg(s12_s1 * g27_u1);
    g27_v0 = reg(g27_na0 * g27_r);
    g27_s0 = g27_v0 ^ g27_t0;
    p20_s0 = g27_p00 ^ g27_s0;
    m12_s0 = p20_s0 ^ p19_s0;
    g27_v1 = reg(g27_na1 * g27_r);
    g27_s1 = g27_v1 ^ g27_t1;
    p20_s1 = g27_p11 ^ g27_s1;
    m12_s1 = p20_s1 ^ p19_s1;
    g28_u0 = reg(m10_s1 ^ g28_r);
    g28_t0 = reg(a36_s0 * g28_u0);
    g28_u1 = reg(m10_s0 ^ g28_r);
    g28_t1 = reg(a36_s1 * g28_u1);
    g28_v0 = reg(g28_na0 * g28_r);
    g28_s0 = g28_v0 ^ g28_t0;
    p27_s0 = g28_p00 ^ g28_s0;
    m19_s0 = p27_s0 ^ p28_s0;
    g28_v1 = reg(g28_na1 * g28_r);
    g28_s1 = g28_v1 ^ g28_t1;
    p27_s1 = g28_p11 ^ g28_s1;
    m19_s1 = p27_s1 ^ p28_s1;
    g29_u0 = reg(s19_s1 ^ g29_r);
    g29_t0 = reg(s18_s0 * g29_u0);
    g29_u1 = reg(s19_s0 ^ g29_r);
    g29_t1 = reg(s18_s1 * g29_u1);
    g29_v0 = reg(g29_na0 * g29_r);
    g29_s0 = g29_v0 ^ g29_t0;
    p29_s0 = g29_p00 ^ g29_s0;
    m18_s0 = p29_s0 ^ p28_s0;
    g29_v1 = reg(g29_na1 * g29_r);
    g29_s1 = g29_v1 ^ g29_t1;
    p29_s1 = g29_p11 ^ g29_s1;
    m18_s1 = p29_s1 ^ p28_s1;
    g30_u0 = reg(a28_s1 ^ g30_r);
    g30_t0 = reg(a26_s0 * g30_u0);
    g30_u1 = reg(a28_s0 ^ g30_r);
    g30_t1 = reg(a26_s1 * g30_u1);
    g30_v0 = reg(g30_na0 * g30_r);
    g30_s0 = g30_v0 ^ g30_t0;
    p21_s0 = g30_p00 ^ g30_s0;
    m15_s0 = p21_s0 ^ p22_s0;
    a31_s0 = m15_s0 ^ m13_s0;
    g30_v1 = reg(g30_na1 * g30_r);
    g30_s1 = g30_v1 ^ g30_t1;
    p21_s1 = g30_p11 ^ g30_s1;
    m15_s1 = p21_s1 ^ p22_s1;
    a31_s1 = m15_s1 ^ m13_s1;
    g31_u0 = reg(s15_s1 ^ g31_r);
    g31_t0 = reg(s14_s0 * g31_u0);
    g31_u1 = reg(s15_s0 ^ g31_r);
    g31_t1 = reg(s14_s1 * g31_u1);
    g31_v0 = reg(g31_na0 * g31_r);
    g31_s0 = g31_v0 ^ g31_t0;
    p23_s0 = g31_p00 ^ g31_s0;
    m14_s0 = p23_s0 ^ p22_s0;
    a30_s0 = m14_s0 ^ m12_s0;
    g31_v1 = reg(g31_na1 * g31_r);
    g31_s1 = g31_v1 ^ g31_t1;
    p23_s1 = g31_p11 ^ g31_s1;
    m14_s1 = p23_s1 ^ p22_s1;
    a30_s1 = m14_s1 ^ m12_s1;
    g32_u0 = reg(s17_s1 ^ g32_r);
    g32_t0 = reg(s16_s0 * g32_u0);
    g32_u1 = reg(s17_s0 ^ g32_r);
    g32_t1 = reg(s16_s1 * g32_u1);
    g32_v0 = reg(g32_na0 * g32_r);
    g32_s0 = g32_v0 ^ g32_t0;
    p26_s0 = g32_p00 ^ g32_s0;
    m16_s0 = p26_s0 ^ p25_s0;
    k4_s0 = m16_s0 ^ m17_s0;
    a32_s0 = k4_s0 ^ m12_s0;
    a33_s0 = m16_s0 ^ m13_s0;
    o6_0_s0 = a33_s0 ^ a32_s0;
    o6n0_s0 = ~o6_0_s0;
    g32_v1 = reg(g32_na1 * g32_r);
    g32_s1 = g32_v1 ^ g32_t1;
    p26_s1 = g32_p11 ^ g32_s1;
    m16_s1 = p26_s1 ^ p25_s1;
    k4_s1 = m16_s1 ^ m17_s1;
    a32_s1 = k4_s1 ^ m12_s1;
    a33_s1 = m16_s1 ^ m13_s1;
    o6_0_s1 = a33_s1 ^ a32_s1;
    g33_u0 = reg(a40_s1 ^ g33_r);
    g33_t0 = reg(a38_s0 * g33_u0);
    g33_u1 = reg(a40_s0 ^ g33_r);
    g33_t1 = reg(a38_s1 * g33_u1);
    g33_v0 = reg(g33_na0 * g33_r);
    g33_s0 = g33_v0 ^ g33_t0;
    p30_s0 = g33_p00 ^ g33_s0;
    m21_s0 = p30_s0 ^ p31_s0;
    a43_s0 = m21_s0 ^ m19_s0;
    o5_0_s0 = a43_s0 ^ a33_s0;
    o5_1_s0 = o5_0_s0 ^ a32_s0;
    o5_2_s0 = o5_1_s0 ^ a31_s0;
    o5n0_s0 = ~o5_2_s0;
    g33_v1 = reg(g33_na1 * g33_r);
    g33_s1 = g33_v1 ^ g33_t1;
    p30_s1 = g33_p11 ^ g33_s1;
    m21_s1 = p30_s1 ^ p31_s1;
    a43_s1 = m21_s1 ^ m19_s1;
    o5_0_s1 = a43_s1 ^ a33_s1;
    o5_1_s1 = o5_0_s1 ^ a32_s1;
    o5_2_s1 = o5_1_s1 ^ a31_s1;
    g34_u0 = reg(s21_s1 ^ g34_r);
    g34_t0 = reg(s20_s0 * g34_u0);
    g34_u1 = reg(s21_s0 ^ g34_r);
    g34_t1 = reg(s20_s1 * g34_u1);
    g34_v0 = reg(g34_na0 * g34_r);
    g34_s0 = g34_v0 ^ g34_t0;
    p32_s0 = g34_p00 ^ g34_s0;
    m20_s0 = p32_s0 ^ p31_s0;
    a42_s0 = m20_s0 ^ m18_s0;
    o7_0_s0 = a43_s0 ^ a42_s0;
    o7_1_s0 = o7_0_s0 ^ a32_s0;
    g34_v1 = reg(g34_na1 * g34_r);
    g34_s1 = g34_v1 ^ g34_t1;
    p32_s1 = g34_p11 ^ g34_s1;
    m20_s1 = p32_s1 ^ p31_s1;
    a42_s1 = m20_s1 ^ m18_s1;
    o7_0_s1 = a43_s1 ^ a42_s1;
    o7_1_s1 = o7_0_s1 ^ a32_s1;
    g35_u0 = reg(m8_s1 ^ g35_r);
    g35_t0 = reg(a34_s0 * g35_u0);
    g35_u1 = reg(m8_s0 ^ g35_r);
    g35_t1 = reg(a34_s1 * g35_u1);
    g35_v0 = reg(g35_na0 * g35_r);
    g35_s0 = g35_v0 ^ g35_t0;
    p33_s0 = g35_p00 ^ g35_s0;
    m23_s0 = p33_s0 ^ p34_s0;
    g35_v1 = reg(g35_na1 * g35_r);
    g35_s1 = g35_v1 ^ g35_t1;
    p33_s1 = g35_p11 ^ g35_s1;
    m23_s1 = p33_s1 ^ p34_s1;
    g36_u0 = reg(s23_s1 ^ g36_r);
    g36_t0 = reg(s22_s0 * g36_u0);
    g36_u1 = reg(s23_s0 ^ g36_r);
    g36_t1 = reg(s22_s1 * g36_u1);
    g36_v0 = reg(g36_na0 * g36_r);
    g36_s0 = g36_v0 ^ g36_t0;
    p35_s0 = g36_p00 ^ g36_s0;
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
    g36_v1 = reg(g36_na1 * g36_r);
    g36_s1 = g36_v1 ^ g36_t1;
    p35_s1 = g36_p11 ^ g36_s1;
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
