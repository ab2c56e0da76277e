// AES S-box as a GF(((2^2)^2)^2) tower inversion with 36 AND gates. x0 and y0 are the LSBs.
int aes_sbox(bool x0, bool x1, bool x2, bool x3, bool x4, bool x5, bool x6, bool x7, bool *y0, bool *y1, bool *y2, bool *y3, bool *y4, bool *y5, bool *y6, bool *y7)
{
    b0_0 = x0 ^ x1;
    b1_0 = x2 ^ x4;
    b1_1 = b1_0 ^ x5;
    b2_0 = x2 ^ x3;
    b2_1 = b2_0 ^ x4;
    b2_2 = b2_1 ^ x7;
    b3_0 = x3 ^ x5;
    b3_1 = b3_0 ^ x6;
    b4_0 = x4 ^ x5;
    b4_1 = b4_0 ^ x6;
    b5_0 = x2 ^ x3;
    b6_0 = x1 ^ x2;
    b6_1 = b6_0 ^ x3;
    b6_2 = b6_1 ^ x4;
    b6_3 = b6_2 ^ x6;
    b6_4 = b6_3 ^ x7;
    b7_0 = x5 ^ x7;
    q0 = b7_0 ^ b6_4;
    q1 = b5_0 ^ b4_1;
    k0 = b7_0 ^ q0;
    a0 = k0 ^ b5_0;
    a1 = b7_0 ^ q1;
    l0 = b7_0 ^ q0;
    l1 = l0 ^ a0;
    l2 = l1 ^ a1;
    l3 = b7_0 ^ a0;
    l4 = b7_0 ^ q0;
    p0 = b5_0 * b1_1;
    p1 = b4_1 * b0_0;
    s0 = b5_0 ^ b4_1;
    s1 = b1_1 ^ b0_0;
    p2 = s0 * s1;
    m0 = p2 ^ p1;
    m1 = p0 ^ p1;
    a2 = b7_0 ^ b5_0;
    a3 = b6_4 ^ b4_1;
    a4 = b3_1 ^ b1_1;
    a5 = b2_2 ^ b0_0;
    p3 = a2 * a4;
    p4 = a3 * a5;
    s2 = a2 ^ a3;
    s3 = a4 ^ a5;
    p5 = s2 * s3;
    m2 = p5 ^ p4;
    m3 = p3 ^ p4;
    a6 = m2 ^ m0;
    a7 = m3 ^ m1;
    p6 = b7_0 * b3_1;
    p7 = b6_4 * b2_2;
    s4 = b7_0 ^ b6_4;
    s5 = b3_1 ^ b2_2;
    p8 = s4 * s5;
    m4 = p8 ^ p7;
    m5 = p6 ^ p7;
    k1 = m4 ^ m5;
    a8 = k1 ^ m0;
    a9 = m4 ^ m1;
    a10 = l2 ^ a6;
    a11 = l3 ^ a7;
    a12 = q0 ^ a8;
    a13 = l4 ^ a9;
    q2 = b3_1 ^ b2_2;
    q3 = b1_1 ^ b0_0;
    k2 = b3_1 ^ q2;
    a14 = k2 ^ b1_1;
    a15 = b3_1 ^ q3;
    a16 = a10 ^ b3_1;
    a17 = a11 ^ q2;
    a18 = a12 ^ a14;
    a19 = a13 ^ a15;
    q4 = a16 ^ a17;
    k3 = a16 ^ q4;
    p9 = a16 * a18;
    p10 = a17 * a19;
    s6 = a16 ^ a17;
    s7 = a18 ^ a19;
    p11 = s6 * s7;
    m6 = p11 ^ p10;
    m7 = p9 ^ p10;
    a20 = k3 ^ m6;
    a21 = a16 ^ m7;
    q5 = a18 ^ a19;
    a22 = a20 ^ a18;
    a23 = a21 ^ q5;
    q6 = a22 ^ a23;
    p12 = a16 * a22;
    p13 = a17 * q6;
    s8 = a16 ^ a17;
    s9 = a22 ^ q6;
    p14 = s8 * s9;
    m8 = p14 ^ p13;
    m9 = p12 ^ p13;
    a24 = a16 ^ a18;
    a25 = a17 ^ a19;
    p15 = a24 * a22;
    p16 = a25 * q6;
    s10 = a24 ^ a25;
    s11 = a22 ^ q6;
    p17 = s10 * s11;
    m10 = p17 ^ p16;
    m11 = p15 ^ p16;
    p18 = b5_0 * m10;
    p19 = b4_1 * m11;
    s12 = b5_0 ^ b4_1;
    s13 = m10 ^ m11;
    p20 = s12 * s13;
    m12 = p20 ^ p19;
    m13 = p18 ^ p19;
    a26 = b7_0 ^ b5_0;
    a27 = b6_4 ^ b4_1;
    a28 = m8 ^ m10;
    a29 = m9 ^ m11;
    p21 = a26 * a28;
    p22 = a27 * a29;
    s14 = a26 ^ a27;
    s15 = a28 ^ a29;
    p23 = s14 * s15;
    m14 = p23 ^ p22;
    m15 = p21 ^ p22;
    a30 = m14 ^ m12;
    a31 = m15 ^ m13;
    p24 = b7_0 * m8;
    p25 = b6_4 * m9;
    s16 = b7_0 ^ b6_4;
    s17 = m8 ^ m9;
    p26 = s16 * s17;
    m16 = p26 ^ p25;
    m17 = p24 ^ p25;
    k4 = m16 ^ m17;
    a32 = k4 ^ m12;
    a33 = m16 ^ m13;
    a34 = b7_0 ^ b3_1;
    a35 = b6_4 ^ b2_2;
    a36 = b5_0 ^ b1_1;
    a37 = b4_1 ^ b0_0;
    p27 = a36 * m10;
    p28 = a37 * m11;
    s18 = a36 ^ a37;
    s19 = m10 ^ m11;
    p29 = s18 * s19;
    m18 = p29 ^ p28;
    m19 = p27 ^ p28;
    a38 = a34 ^ a36;
    a39 = a35 ^ a37;
    a40 = m8 ^ m10;
    a41 = m9 ^ m11;
    p30 = a38 * a40;
    p31 = a39 * a41;
    s20 = a38 ^ a39;
    s21 = a40 ^ a41;
    p32 = s20 * s21;
    m20 = p32 ^ p31;
    m21 = p30 ^ p31;
    a42 = m20 ^ m18;
    a43 = m21 ^ m19;
    p33 = a34 * m8;
    p34 = a35 * m9;
    s22 = a34 ^ a35;
    s23 = m8 ^ m9;
    p35 = s22 * s23;
    m22 = p35 ^ p34;
    m23 = p33 ^ p34;
    k5 = m22 ^ m23;
    a44 = k5 ^ m18;
    a45 = m22 ^ m19;
    o0_0 = a45 ^ a44;
    o0_1 = o0_0 ^ a42;
    o0_2 = o0_1 ^ a33;
    o0_3 = o0_2 ^ a31;
    o0n0 = ~o0_3;
    o1_0 = a45 ^ a43;
    o1_1 = o1_0 ^ a33;
    o1_2 = o1_1 ^ a32;
    o1n0 = ~o1_2;
    o2_0 = a45 ^ a42;
    o2_1 = o2_0 ^ a32;
    o2_2 = o2_1 ^ a30;
    o3_0 = a45 ^ a44;
    o3_1 = o3_0 ^ a42;
    o3_2 = o3_1 ^ a33;
    o3_3 = o3_2 ^ a30;
    o4_0 = a45 ^ a44;
    o4_1 = o4_0 ^ a43;
    o4_2 = o4_1 ^ a42;
    o4_3 = o4_2 ^ a33;
    o4_4 = o4_3 ^ a32;
    o4_5 = o4_4 ^ a30;
    o5_0 = a43 ^ a33;
    o5_1 = o5_0 ^ a32;
    o5_2 = o5_1 ^ a31;
    o5n0 = ~o5_2;
    o6_0 = a33 ^ a32;
    o6n0 = ~o6_0;
    o7_0 = a43 ^ a42;
    o7_1 = o7_0 ^ a32;
    *y0 = o0n0;
    *y1 = o1n0;
    *y2 = o2_2;
    *y3 = o3_3;
    *y4 = o4_5;
    *y5 = o5n0;
    *y6 = o6n0;
    *y7 = o7_1;
    return 0;
}
