// Four registered gates on two levels. Only the four gate registers are
// required, the rest only balance.
int motivating(bool x1, bool x2, bool x3, bool x4, bool x5, bool x6,
               bool x7, bool x8, bool x9, bool x10, bool x11, bool x12,
               bool *y1, bool *y2)
{
    n1 = x1 ^ x2;
    n9 = reg(n1 & x3);
    n7 = x4 ^ x5;
    n12 = reg(n7 & x6);
    n4 = reg(x7 & x8);
    n10 = n4 ^ x9;
    n5 = reg(x10 & x11);
    n11 = n5 ^ x12;
    *y1 = n9 ^ n10;
    *y2 = n11 ^ n12;
    return 0;
}
