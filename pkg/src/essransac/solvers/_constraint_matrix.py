"""Machine-generated by tools/gen_constraint_matrix.py.  Do not edit."""

import numpy as np


def constraint_matrix(basis):
    """Return the 10x20 cubic constraint matrix for a 4x9 null-space basis."""
    X, Y, Z, W = (list(map(float, row)) for row in basis)
    x0, x1, x2, x3, x4, x5, x6, x7, x8 = X
    y0, y1, y2, y3, y4, y5, y6, y7, y8 = Y
    z0, z1, z2, z3, z4, z5, z6, z7, z8 = Z
    w0, w1, w2, w3, w4, w5, w6, w7, w8 = W
    a0 = 2*x0
    a1 = 2*x1
    a2 = 2*x2
    a3 = 2*y0
    a4 = 2*y1
    a5 = 2*y2
    a6 = 2*x3
    a7 = 2*x4
    a8 = 2*x5
    a9 = 2*y3
    a10 = 2*y4
    a11 = 2*y5
    a12 = 2*x6
    a13 = 2*x7
    a14 = 2*x8
    a15 = 2*y6
    a16 = 2*y7
    a17 = 2*y8
    p00_0 = x0**2 + x1**2 + x2**2
    p00_1 = a0*y0 + a1*y1 + a2*y2
    p00_2 = y0**2 + y1**2 + y2**2
    p00_3 = a0*z0 + a1*z1 + a2*z2
    p00_4 = a3*z0 + a4*z1 + a5*z2
    p00_5 = z0**2 + z1**2 + z2**2
    p00_6 = a0*w0 + a1*w1 + a2*w2
    p00_7 = a3*w0 + a4*w1 + a5*w2
    p00_8 = 2*w0*z0 + 2*w1*z1 + 2*w2*z2
    p00_9 = w0**2 + w1**2 + w2**2
    p01_0 = x0*x3 + x1*x4 + x2*x5
    p01_1 = x0*y3 + x1*y4 + x2*y5 + x3*y0 + x4*y1 + x5*y2
    p01_2 = y0*y3 + y1*y4 + y2*y5
    p01_3 = x0*z3 + x1*z4 + x2*z5 + x3*z0 + x4*z1 + x5*z2
    p01_4 = y0*z3 + y1*z4 + y2*z5 + y3*z0 + y4*z1 + y5*z2
    p01_5 = z0*z3 + z1*z4 + z2*z5
    p01_6 = w0*x3 + w1*x4 + w2*x5 + w3*x0 + w4*x1 + w5*x2
    p01_7 = w0*y3 + w1*y4 + w2*y5 + w3*y0 + w4*y1 + w5*y2
    p01_8 = w0*z3 + w1*z4 + w2*z5 + w3*z0 + w4*z1 + w5*z2
    p01_9 = w0*w3 + w1*w4 + w2*w5
    p02_0 = x0*x6 + x1*x7 + x2*x8
    p02_1 = x0*y6 + x1*y7 + x2*y8 + x6*y0 + x7*y1 + x8*y2
    p02_2 = y0*y6 + y1*y7 + y2*y8
    p02_3 = x0*z6 + x1*z7 + x2*z8 + x6*z0 + x7*z1 + x8*z2
    p02_4 = y0*z6 + y1*z7 + y2*z8 + y6*z0 + y7*z1 + y8*z2
    p02_5 = z0*z6 + z1*z7 + z2*z8
    p02_6 = w0*x6 + w1*x7 + w2*x8 + w6*x0 + w7*x1 + w8*x2
    p02_7 = w0*y6 + w1*y7 + w2*y8 + w6*y0 + w7*y1 + w8*y2
    p02_8 = w0*z6 + w1*z7 + w2*z8 + w6*z0 + w7*z1 + w8*z2
    p02_9 = w0*w6 + w1*w7 + w2*w8
    p11_0 = x3**2 + x4**2 + x5**2
    p11_1 = a6*y3 + a7*y4 + a8*y5
    p11_2 = y3**2 + y4**2 + y5**2
    p11_3 = a6*z3 + a7*z4 + a8*z5
    p11_4 = a10*z4 + a11*z5 + a9*z3
    p11_5 = z3**2 + z4**2 + z5**2
    p11_6 = a6*w3 + a7*w4 + a8*w5
    p11_7 = a10*w4 + a11*w5 + a9*w3
    p11_8 = 2*w3*z3 + 2*w4*z4 + 2*w5*z5
    p11_9 = w3**2 + w4**2 + w5**2
    p12_0 = x3*x6 + x4*x7 + x5*x8
    p12_1 = x3*y6 + x4*y7 + x5*y8 + x6*y3 + x7*y4 + x8*y5
    p12_2 = y3*y6 + y4*y7 + y5*y8
    p12_3 = x3*z6 + x4*z7 + x5*z8 + x6*z3 + x7*z4 + x8*z5
    p12_4 = y3*z6 + y4*z7 + y5*z8 + y6*z3 + y7*z4 + y8*z5
    p12_5 = z3*z6 + z4*z7 + z5*z8
    p12_6 = w3*x6 + w4*x7 + w5*x8 + w6*x3 + w7*x4 + w8*x5
    p12_7 = w3*y6 + w4*y7 + w5*y8 + w6*y3 + w7*y4 + w8*y5
    p12_8 = w3*z6 + w4*z7 + w5*z8 + w6*z3 + w7*z4 + w8*z5
    p12_9 = w3*w6 + w4*w7 + w5*w8
    p22_0 = x6**2 + x7**2 + x8**2
    p22_1 = a12*y6 + a13*y7 + a14*y8
    p22_2 = y6**2 + y7**2 + y8**2
    p22_3 = a12*z6 + a13*z7 + a14*z8
    p22_4 = a15*z6 + a16*z7 + a17*z8
    p22_5 = z6**2 + z7**2 + z8**2
    p22_6 = a12*w6 + a13*w7 + a14*w8
    p22_7 = a15*w6 + a16*w7 + a17*w8
    p22_8 = 2*w6*z6 + 2*w7*z7 + 2*w8*z8
    p22_9 = w6**2 + w7**2 + w8**2
    m0_0 = x4*x8 - x5*x7
    m0_1 = x4*y8 - x5*y7 - x7*y5 + x8*y4
    m0_2 = y4*y8 - y5*y7
    m0_3 = x4*z8 - x5*z7 - x7*z5 + x8*z4
    m0_4 = y4*z8 - y5*z7 - y7*z5 + y8*z4
    m0_5 = z4*z8 - z5*z7
    m0_6 = w4*x8 - w5*x7 - w7*x5 + w8*x4
    m0_7 = w4*y8 - w5*y7 - w7*y5 + w8*y4
    m0_8 = w4*z8 - w5*z7 - w7*z5 + w8*z4
    m0_9 = w4*w8 - w5*w7
    m1_0 = -x3*x8 + x5*x6
    m1_1 = -x3*y8 + x5*y6 + x6*y5 - x8*y3
    m1_2 = -y3*y8 + y5*y6
    m1_3 = -x3*z8 + x5*z6 + x6*z5 - x8*z3
    m1_4 = -y3*z8 + y5*z6 + y6*z5 - y8*z3
    m1_5 = -z3*z8 + z5*z6
    m1_6 = -w3*x8 + w5*x6 + w6*x5 - w8*x3
    m1_7 = -w3*y8 + w5*y6 + w6*y5 - w8*y3
    m1_8 = -w3*z8 + w5*z6 + w6*z5 - w8*z3
    m1_9 = -w3*w8 + w5*w6
    m2_0 = x3*x7 - x4*x6
    m2_1 = x3*y7 - x4*y6 - x6*y4 + x7*y3
    m2_2 = y3*y7 - y4*y6
    m2_3 = x3*z7 - x4*z6 - x6*z4 + x7*z3
    m2_4 = y3*z7 - y4*z6 - y6*z4 + y7*z3
    m2_5 = z3*z7 - z4*z6
    m2_6 = w3*x7 - w4*x6 - w6*x4 + w7*x3
    m2_7 = w3*y7 - w4*y6 - w6*y4 + w7*y3
    m2_8 = w3*z7 - w4*z6 - w6*z4 + w7*z3
    m2_9 = w3*w7 - w4*w6
    b0 = 2*p01_0
    b1 = 2*p02_0
    b2 = 2*y3
    b3 = 2*y6
    b4 = 2*x3
    b5 = 2*x6
    b6 = 2*p01_2
    b7 = 2*p02_2
    b8 = 2*p01_1
    b9 = 2*p02_1
    b10 = 2*p01_3
    b11 = 2*p02_3
    b12 = 2*p01_6
    b13 = 2*p02_6
    b14 = 2*p01_4
    b15 = 2*p02_4
    b16 = 2*p01_7
    b17 = 2*p02_7
    b18 = 2*p01_5
    b19 = 2*p02_5
    b20 = 2*p01_8
    b21 = 2*p02_8
    b22 = 2*p01_9
    b23 = 2*p02_9
    b24 = 2*p12_0
    b25 = 2*p12_2
    b26 = 2*p12_1
    b27 = 2*p12_3
    b28 = 2*p12_6
    b29 = 2*p12_4
    b30 = 2*p12_7
    b31 = 2*p12_5
    b32 = 2*p12_8
    b33 = 2*p12_9
    M = np.empty((10, 20))
    M[0, 0] = m0_0*x0 + m1_0*x1 + m2_0*x2
    M[0, 1] = m0_2*y0 + m1_2*y1 + m2_2*y2
    M[0, 2] = m0_0*y0 + m0_1*x0 + m1_0*y1 + m1_1*x1 + m2_0*y2 + m2_1*x2
    M[0, 3] = m0_1*y0 + m0_2*x0 + m1_1*y1 + m1_2*x1 + m2_1*y2 + m2_2*x2
    M[0, 4] = m0_0*z0 + m0_3*x0 + m1_0*z1 + m1_3*x1 + m2_0*z2 + m2_3*x2
    M[0, 5] = m0_0*w0 + m0_6*x0 + m1_0*w1 + m1_6*x1 + m2_0*w2 + m2_6*x2
    M[0, 6] = m0_2*z0 + m0_4*y0 + m1_2*z1 + m1_4*y1 + m2_2*z2 + m2_4*y2
    M[0, 7] = m0_2*w0 + m0_7*y0 + m1_2*w1 + m1_7*y1 + m2_2*w2 + m2_7*y2
    M[0, 8] = m0_1*z0 + m0_3*y0 + m0_4*x0 + m1_1*z1 + m1_3*y1 + m1_4*x1 + m2_1*z2 + m2_3*y2 + m2_4*x2
    M[0, 9] = m0_1*w0 + m0_6*y0 + m0_7*x0 + m1_1*w1 + m1_6*y1 + m1_7*x1 + m2_1*w2 + m2_6*y2 + m2_7*x2
    M[0, 10] = m0_3*z0 + m0_5*x0 + m1_3*z1 + m1_5*x1 + m2_3*z2 + m2_5*x2
    M[0, 11] = m0_3*w0 + m0_6*z0 + m0_8*x0 + m1_3*w1 + m1_6*z1 + m1_8*x1 + m2_3*w2 + m2_6*z2 + m2_8*x2
    M[0, 12] = m0_6*w0 + m0_9*x0 + m1_6*w1 + m1_9*x1 + m2_6*w2 + m2_9*x2
    M[0, 13] = m0_4*z0 + m0_5*y0 + m1_4*z1 + m1_5*y1 + m2_4*z2 + m2_5*y2
    M[0, 14] = m0_4*w0 + m0_7*z0 + m0_8*y0 + m1_4*w1 + m1_7*z1 + m1_8*y1 + m2_4*w2 + m2_7*z2 + m2_8*y2
    M[0, 15] = m0_7*w0 + m0_9*y0 + m1_7*w1 + m1_9*y1 + m2_7*w2 + m2_9*y2
    M[0, 16] = m0_5*z0 + m1_5*z1 + m2_5*z2
    M[0, 17] = m0_5*w0 + m0_8*z0 + m1_5*w1 + m1_8*z1 + m2_5*w2 + m2_8*z2
    M[0, 18] = m0_8*w0 + m0_9*z0 + m1_8*w1 + m1_9*z1 + m2_8*w2 + m2_9*z2
    M[0, 19] = m0_9*w0 + m1_9*w1 + m2_9*w2
    M[1, 0] = b0*x3 + b1*x6 + p00_0*x0 - p11_0*x0 - p22_0*x0
    M[1, 1] = b2*p01_2 + b3*p02_2 + p00_2*y0 - p11_2*y0 - p22_2*y0
    M[1, 2] = b0*y3 + b1*y6 + b4*p01_1 + b5*p02_1 + p00_0*y0 + p00_1*x0 - p11_0*y0 - p11_1*x0 - p22_0*y0 - p22_1*x0
    M[1, 3] = b2*p01_1 + b3*p02_1 + b4*p01_2 + b5*p02_2 + p00_1*y0 + p00_2*x0 - p11_1*y0 - p11_2*x0 - p22_1*y0 - p22_2*x0
    M[1, 4] = b0*z3 + b1*z6 + b4*p01_3 + b5*p02_3 + p00_0*z0 + p00_3*x0 - p11_0*z0 - p11_3*x0 - p22_0*z0 - p22_3*x0
    M[1, 5] = b0*w3 + b1*w6 + b4*p01_6 + b5*p02_6 + p00_0*w0 + p00_6*x0 - p11_0*w0 - p11_6*x0 - p22_0*w0 - p22_6*x0
    M[1, 6] = b2*p01_4 + b3*p02_4 + b6*z3 + b7*z6 + p00_2*z0 + p00_4*y0 - p11_2*z0 - p11_4*y0 - p22_2*z0 - p22_4*y0
    M[1, 7] = b2*p01_7 + b3*p02_7 + b6*w3 + b7*w6 + p00_2*w0 + p00_7*y0 - p11_2*w0 - p11_7*y0 - p22_2*w0 - p22_7*y0
    M[1, 8] = b2*p01_3 + b3*p02_3 + b4*p01_4 + b5*p02_4 + b8*z3 + b9*z6 + p00_1*z0 + p00_3*y0 + p00_4*x0 - p11_1*z0 - p11_3*y0 - p11_4*x0 - p22_1*z0 - p22_3*y0 - p22_4*x0
    M[1, 9] = b2*p01_6 + b3*p02_6 + b4*p01_7 + b5*p02_7 + b8*w3 + b9*w6 + p00_1*w0 + p00_6*y0 + p00_7*x0 - p11_1*w0 - p11_6*y0 - p11_7*x0 - p22_1*w0 - p22_6*y0 - p22_7*x0
    M[1, 10] = b10*z3 + b11*z6 + b4*p01_5 + b5*p02_5 + p00_3*z0 + p00_5*x0 - p11_3*z0 - p11_5*x0 - p22_3*z0 - p22_5*x0
    M[1, 11] = b10*w3 + b11*w6 + b12*z3 + b13*z6 + b4*p01_8 + b5*p02_8 + p00_3*w0 + p00_6*z0 + p00_8*x0 - p11_3*w0 - p11_6*z0 - p11_8*x0 - p22_3*w0 - p22_6*z0 - p22_8*x0
    M[1, 12] = b12*w3 + b13*w6 + b4*p01_9 + b5*p02_9 + p00_6*w0 + p00_9*x0 - p11_6*w0 - p11_9*x0 - p22_6*w0 - p22_9*x0
    M[1, 13] = b14*z3 + b15*z6 + b2*p01_5 + b3*p02_5 + p00_4*z0 + p00_5*y0 - p11_4*z0 - p11_5*y0 - p22_4*z0 - p22_5*y0
    M[1, 14] = b14*w3 + b15*w6 + b16*z3 + b17*z6 + b2*p01_8 + b3*p02_8 + p00_4*w0 + p00_7*z0 + p00_8*y0 - p11_4*w0 - p11_7*z0 - p11_8*y0 - p22_4*w0 - p22_7*z0 - p22_8*y0
    M[1, 15] = b16*w3 + b17*w6 + b2*p01_9 + b3*p02_9 + p00_7*w0 + p00_9*y0 - p11_7*w0 - p11_9*y0 - p22_7*w0 - p22_9*y0
    M[1, 16] = b18*z3 + b19*z6 + p00_5*z0 - p11_5*z0 - p22_5*z0
    M[1, 17] = b18*w3 + b19*w6 + b20*z3 + b21*z6 + p00_5*w0 + p00_8*z0 - p11_5*w0 - p11_8*z0 - p22_5*w0 - p22_8*z0
    M[1, 18] = b20*w3 + b21*w6 + b22*z3 + b23*z6 + p00_8*w0 + p00_9*z0 - p11_8*w0 - p11_9*z0 - p22_8*w0 - p22_9*z0
    M[1, 19] = b22*w3 + b23*w6 + p00_9*w0 - p11_9*w0 - p22_9*w0
    M[2, 0] = b0*x4 + b1*x7 + p00_0*x1 - p11_0*x1 - p22_0*x1
    M[2, 1] = b6*y4 + b7*y7 + p00_2*y1 - p11_2*y1 - p22_2*y1
    M[2, 2] = b0*y4 + b1*y7 + b8*x4 + b9*x7 + p00_0*y1 + p00_1*x1 - p11_0*y1 - p11_1*x1 - p22_0*y1 - p22_1*x1
    M[2, 3] = b6*x4 + b7*x7 + b8*y4 + b9*y7 + p00_1*y1 + p00_2*x1 - p11_1*y1 - p11_2*x1 - p22_1*y1 - p22_2*x1
    M[2, 4] = b0*z4 + b1*z7 + b10*x4 + b11*x7 + p00_0*z1 + p00_3*x1 - p11_0*z1 - p11_3*x1 - p22_0*z1 - p22_3*x1
    M[2, 5] = b0*w4 + b1*w7 + b12*x4 + b13*x7 + p00_0*w1 + p00_6*x1 - p11_0*w1 - p11_6*x1 - p22_0*w1 - p22_6*x1
    M[2, 6] = b14*y4 + b15*y7 + b6*z4 + b7*z7 + p00_2*z1 + p00_4*y1 - p11_2*z1 - p11_4*y1 - p22_2*z1 - p22_4*y1
    M[2, 7] = b16*y4 + b17*y7 + b6*w4 + b7*w7 + p00_2*w1 + p00_7*y1 - p11_2*w1 - p11_7*y1 - p22_2*w1 - p22_7*y1
    M[2, 8] = b10*y4 + b11*y7 + b14*x4 + b15*x7 + b8*z4 + b9*z7 + p00_1*z1 + p00_3*y1 + p00_4*x1 - p11_1*z1 - p11_3*y1 - p11_4*x1 - p22_1*z1 - p22_3*y1 - p22_4*x1
    M[2, 9] = b12*y4 + b13*y7 + b16*x4 + b17*x7 + b8*w4 + b9*w7 + p00_1*w1 + p00_6*y1 + p00_7*x1 - p11_1*w1 - p11_6*y1 - p11_7*x1 - p22_1*w1 - p22_6*y1 - p22_7*x1
    M[2, 10] = b10*z4 + b11*z7 + b18*x4 + b19*x7 + p00_3*z1 + p00_5*x1 - p11_3*z1 - p11_5*x1 - p22_3*z1 - p22_5*x1
    M[2, 11] = b10*w4 + b11*w7 + b12*z4 + b13*z7 + b20*x4 + b21*x7 + p00_3*w1 + p00_6*z1 + p00_8*x1 - p11_3*w1 - p11_6*z1 - p11_8*x1 - p22_3*w1 - p22_6*z1 - p22_8*x1
    M[2, 12] = b12*w4 + b13*w7 + b22*x4 + b23*x7 + p00_6*w1 + p00_9*x1 - p11_6*w1 - p11_9*x1 - p22_6*w1 - p22_9*x1
    M[2, 13] = b14*z4 + b15*z7 + b18*y4 + b19*y7 + p00_4*z1 + p00_5*y1 - p11_4*z1 - p11_5*y1 - p22_4*z1 - p22_5*y1
    M[2, 14] = b14*w4 + b15*w7 + b16*z4 + b17*z7 + b20*y4 + b21*y7 + p00_4*w1 + p00_7*z1 + p00_8*y1 - p11_4*w1 - p11_7*z1 - p11_8*y1 - p22_4*w1 - p22_7*z1 - p22_8*y1
    M[2, 15] = b16*w4 + b17*w7 + b22*y4 + b23*y7 + p00_7*w1 + p00_9*y1 - p11_7*w1 - p11_9*y1 - p22_7*w1 - p22_9*y1
    M[2, 16] = b18*z4 + b19*z7 + p00_5*z1 - p11_5*z1 - p22_5*z1
    M[2, 17] = b18*w4 + b19*w7 + b20*z4 + b21*z7 + p00_5*w1 + p00_8*z1 - p11_5*w1 - p11_8*z1 - p22_5*w1 - p22_8*z1
    M[2, 18] = b20*w4 + b21*w7 + b22*z4 + b23*z7 + p00_8*w1 + p00_9*z1 - p11_8*w1 - p11_9*z1 - p22_8*w1 - p22_9*z1
    M[2, 19] = b22*w4 + b23*w7 + p00_9*w1 - p11_9*w1 - p22_9*w1
    M[3, 0] = b0*x5 + b1*x8 + p00_0*x2 - p11_0*x2 - p22_0*x2
    M[3, 1] = b6*y5 + b7*y8 + p00_2*y2 - p11_2*y2 - p22_2*y2
    M[3, 2] = b0*y5 + b1*y8 + b8*x5 + b9*x8 + p00_0*y2 + p00_1*x2 - p11_0*y2 - p11_1*x2 - p22_0*y2 - p22_1*x2
    M[3, 3] = b6*x5 + b7*x8 + b8*y5 + b9*y8 + p00_1*y2 + p00_2*x2 - p11_1*y2 - p11_2*x2 - p22_1*y2 - p22_2*x2
    M[3, 4] = b0*z5 + b1*z8 + b10*x5 + b11*x8 + p00_0*z2 + p00_3*x2 - p11_0*z2 - p11_3*x2 - p22_0*z2 - p22_3*x2
    M[3, 5] = b0*w5 + b1*w8 + b12*x5 + b13*x8 + p00_0*w2 + p00_6*x2 - p11_0*w2 - p11_6*x2 - p22_0*w2 - p22_6*x2
    M[3, 6] = b14*y5 + b15*y8 + b6*z5 + b7*z8 + p00_2*z2 + p00_4*y2 - p11_2*z2 - p11_4*y2 - p22_2*z2 - p22_4*y2
    M[3, 7] = b16*y5 + b17*y8 + b6*w5 + b7*w8 + p00_2*w2 + p00_7*y2 - p11_2*w2 - p11_7*y2 - p22_2*w2 - p22_7*y2
    M[3, 8] = b10*y5 + b11*y8 + b14*x5 + b15*x8 + b8*z5 + b9*z8 + p00_1*z2 + p00_3*y2 + p00_4*x2 - p11_1*z2 - p11_3*y2 - p11_4*x2 - p22_1*z2 - p22_3*y2 - p22_4*x2
    M[3, 9] = b12*y5 + b13*y8 + b16*x5 + b17*x8 + b8*w5 + b9*w8 + p00_1*w2 + p00_6*y2 + p00_7*x2 - p11_1*w2 - p11_6*y2 - p11_7*x2 - p22_1*w2 - p22_6*y2 - p22_7*x2
    M[3, 10] = b10*z5 + b11*z8 + b18*x5 + b19*x8 + p00_3*z2 + p00_5*x2 - p11_3*z2 - p11_5*x2 - p22_3*z2 - p22_5*x2
    M[3, 11] = b10*w5 + b11*w8 + b12*z5 + b13*z8 + b20*x5 + b21*x8 + p00_3*w2 + p00_6*z2 + p00_8*x2 - p11_3*w2 - p11_6*z2 - p11_8*x2 - p22_3*w2 - p22_6*z2 - p22_8*x2
    M[3, 12] = b12*w5 + b13*w8 + b22*x5 + b23*x8 + p00_6*w2 + p00_9*x2 - p11_6*w2 - p11_9*x2 - p22_6*w2 - p22_9*x2
    M[3, 13] = b14*z5 + b15*z8 + b18*y5 + b19*y8 + p00_4*z2 + p00_5*y2 - p11_4*z2 - p11_5*y2 - p22_4*z2 - p22_5*y2
    M[3, 14] = b14*w5 + b15*w8 + b16*z5 + b17*z8 + b20*y5 + b21*y8 + p00_4*w2 + p00_7*z2 + p00_8*y2 - p11_4*w2 - p11_7*z2 - p11_8*y2 - p22_4*w2 - p22_7*z2 - p22_8*y2
    M[3, 15] = b16*w5 + b17*w8 + b22*y5 + b23*y8 + p00_7*w2 + p00_9*y2 - p11_7*w2 - p11_9*y2 - p22_7*w2 - p22_9*y2
    M[3, 16] = b18*z5 + b19*z8 + p00_5*z2 - p11_5*z2 - p22_5*z2
    M[3, 17] = b18*w5 + b19*w8 + b20*z5 + b21*z8 + p00_5*w2 + p00_8*z2 - p11_5*w2 - p11_8*z2 - p22_5*w2 - p22_8*z2
    M[3, 18] = b20*w5 + b21*w8 + b22*z5 + b23*z8 + p00_8*w2 + p00_9*z2 - p11_8*w2 - p11_9*z2 - p22_8*w2 - p22_9*z2
    M[3, 19] = b22*w5 + b23*w8 + p00_9*w2 - p11_9*w2 - p22_9*w2
    M[4, 0] = b0*x0 + b5*p12_0 - p00_0*x3 + p11_0*x3 - p22_0*x3
    M[4, 1] = b3*p12_2 + b6*y0 - p00_2*y3 + p11_2*y3 - p22_2*y3
    M[4, 2] = b0*y0 + b3*p12_0 + b5*p12_1 + b8*x0 - p00_0*y3 - p00_1*x3 + p11_0*y3 + p11_1*x3 - p22_0*y3 - p22_1*x3
    M[4, 3] = b3*p12_1 + b5*p12_2 + b6*x0 + b8*y0 - p00_1*y3 - p00_2*x3 + p11_1*y3 + p11_2*x3 - p22_1*y3 - p22_2*x3
    M[4, 4] = b0*z0 + b10*x0 + b24*z6 + b5*p12_3 - p00_0*z3 - p00_3*x3 + p11_0*z3 + p11_3*x3 - p22_0*z3 - p22_3*x3
    M[4, 5] = b0*w0 + b12*x0 + b24*w6 + b5*p12_6 - p00_0*w3 - p00_6*x3 + p11_0*w3 + p11_6*x3 - p22_0*w3 - p22_6*x3
    M[4, 6] = b14*y0 + b25*z6 + b3*p12_4 + b6*z0 - p00_2*z3 - p00_4*y3 + p11_2*z3 + p11_4*y3 - p22_2*z3 - p22_4*y3
    M[4, 7] = b16*y0 + b25*w6 + b3*p12_7 + b6*w0 - p00_2*w3 - p00_7*y3 + p11_2*w3 + p11_7*y3 - p22_2*w3 - p22_7*y3
    M[4, 8] = b10*y0 + b14*x0 + b26*z6 + b3*p12_3 + b5*p12_4 + b8*z0 - p00_1*z3 - p00_3*y3 - p00_4*x3 + p11_1*z3 + p11_3*y3 + p11_4*x3 - p22_1*z3 - p22_3*y3 - p22_4*x3
    M[4, 9] = b12*y0 + b16*x0 + b26*w6 + b3*p12_6 + b5*p12_7 + b8*w0 - p00_1*w3 - p00_6*y3 - p00_7*x3 + p11_1*w3 + p11_6*y3 + p11_7*x3 - p22_1*w3 - p22_6*y3 - p22_7*x3
    M[4, 10] = b10*z0 + b18*x0 + b27*z6 + b5*p12_5 - p00_3*z3 - p00_5*x3 + p11_3*z3 + p11_5*x3 - p22_3*z3 - p22_5*x3
    M[4, 11] = b10*w0 + b12*z0 + b20*x0 + b27*w6 + b28*z6 + b5*p12_8 - p00_3*w3 - p00_6*z3 - p00_8*x3 + p11_3*w3 + p11_6*z3 + p11_8*x3 - p22_3*w3 - p22_6*z3 - p22_8*x3
    M[4, 12] = b12*w0 + b22*x0 + b28*w6 + b5*p12_9 - p00_6*w3 - p00_9*x3 + p11_6*w3 + p11_9*x3 - p22_6*w3 - p22_9*x3
    M[4, 13] = b14*z0 + b18*y0 + b29*z6 + b3*p12_5 - p00_4*z3 - p00_5*y3 + p11_4*z3 + p11_5*y3 - p22_4*z3 - p22_5*y3
    M[4, 14] = b14*w0 + b16*z0 + b20*y0 + b29*w6 + b3*p12_8 + b30*z6 - p00_4*w3 - p00_7*z3 - p00_8*y3 + p11_4*w3 + p11_7*z3 + p11_8*y3 - p22_4*w3 - p22_7*z3 - p22_8*y3
    M[4, 15] = b16*w0 + b22*y0 + b3*p12_9 + b30*w6 - p00_7*w3 - p00_9*y3 + p11_7*w3 + p11_9*y3 - p22_7*w3 - p22_9*y3
    M[4, 16] = b18*z0 + b31*z6 - p00_5*z3 + p11_5*z3 - p22_5*z3
    M[4, 17] = b18*w0 + b20*z0 + b31*w6 + b32*z6 - p00_5*w3 - p00_8*z3 + p11_5*w3 + p11_8*z3 - p22_5*w3 - p22_8*z3
    M[4, 18] = b20*w0 + b22*z0 + b32*w6 + b33*z6 - p00_8*w3 - p00_9*z3 + p11_8*w3 + p11_9*z3 - p22_8*w3 - p22_9*z3
    M[4, 19] = b22*w0 + b33*w6 - p00_9*w3 + p11_9*w3 - p22_9*w3
    M[5, 0] = b0*x1 + b24*x7 - p00_0*x4 + p11_0*x4 - p22_0*x4
    M[5, 1] = b25*y7 + b6*y1 - p00_2*y4 + p11_2*y4 - p22_2*y4
    M[5, 2] = b0*y1 + b24*y7 + b26*x7 + b8*x1 - p00_0*y4 - p00_1*x4 + p11_0*y4 + p11_1*x4 - p22_0*y4 - p22_1*x4
    M[5, 3] = b25*x7 + b26*y7 + b6*x1 + b8*y1 - p00_1*y4 - p00_2*x4 + p11_1*y4 + p11_2*x4 - p22_1*y4 - p22_2*x4
    M[5, 4] = b0*z1 + b10*x1 + b24*z7 + b27*x7 - p00_0*z4 - p00_3*x4 + p11_0*z4 + p11_3*x4 - p22_0*z4 - p22_3*x4
    M[5, 5] = b0*w1 + b12*x1 + b24*w7 + b28*x7 - p00_0*w4 - p00_6*x4 + p11_0*w4 + p11_6*x4 - p22_0*w4 - p22_6*x4
    M[5, 6] = b14*y1 + b25*z7 + b29*y7 + b6*z1 - p00_2*z4 - p00_4*y4 + p11_2*z4 + p11_4*y4 - p22_2*z4 - p22_4*y4
    M[5, 7] = b16*y1 + b25*w7 + b30*y7 + b6*w1 - p00_2*w4 - p00_7*y4 + p11_2*w4 + p11_7*y4 - p22_2*w4 - p22_7*y4
    M[5, 8] = b10*y1 + b14*x1 + b26*z7 + b27*y7 + b29*x7 + b8*z1 - p00_1*z4 - p00_3*y4 - p00_4*x4 + p11_1*z4 + p11_3*y4 + p11_4*x4 - p22_1*z4 - p22_3*y4 - p22_4*x4
    M[5, 9] = b12*y1 + b16*x1 + b26*w7 + b28*y7 + b30*x7 + b8*w1 - p00_1*w4 - p00_6*y4 - p00_7*x4 + p11_1*w4 + p11_6*y4 + p11_7*x4 - p22_1*w4 - p22_6*y4 - p22_7*x4
    M[5, 10] = b10*z1 + b18*x1 + b27*z7 + b31*x7 - p00_3*z4 - p00_5*x4 + p11_3*z4 + p11_5*x4 - p22_3*z4 - p22_5*x4
    M[5, 11] = b10*w1 + b12*z1 + b20*x1 + b27*w7 + b28*z7 + b32*x7 - p00_3*w4 - p00_6*z4 - p00_8*x4 + p11_3*w4 + p11_6*z4 + p11_8*x4 - p22_3*w4 - p22_6*z4 - p22_8*x4
    M[5, 12] = b12*w1 + b22*x1 + b28*w7 + b33*x7 - p00_6*w4 - p00_9*x4 + p11_6*w4 + p11_9*x4 - p22_6*w4 - p22_9*x4
    M[5, 13] = b14*z1 + b18*y1 + b29*z7 + b31*y7 - p00_4*z4 - p00_5*y4 + p11_4*z4 + p11_5*y4 - p22_4*z4 - p22_5*y4
    M[5, 14] = b14*w1 + b16*z1 + b20*y1 + b29*w7 + b30*z7 + b32*y7 - p00_4*w4 - p00_7*z4 - p00_8*y4 + p11_4*w4 + p11_7*z4 + p11_8*y4 - p22_4*w4 - p22_7*z4 - p22_8*y4
    M[5, 15] = b16*w1 + b22*y1 + b30*w7 + b33*y7 - p00_7*w4 - p00_9*y4 + p11_7*w4 + p11_9*y4 - p22_7*w4 - p22_9*y4
    M[5, 16] = b18*z1 + b31*z7 - p00_5*z4 + p11_5*z4 - p22_5*z4
    M[5, 17] = b18*w1 + b20*z1 + b31*w7 + b32*z7 - p00_5*w4 - p00_8*z4 + p11_5*w4 + p11_8*z4 - p22_5*w4 - p22_8*z4
    M[5, 18] = b20*w1 + b22*z1 + b32*w7 + b33*z7 - p00_8*w4 - p00_9*z4 + p11_8*w4 + p11_9*z4 - p22_8*w4 - p22_9*z4
    M[5, 19] = b22*w1 + b33*w7 - p00_9*w4 + p11_9*w4 - p22_9*w4
    M[6, 0] = b0*x2 + b24*x8 - p00_0*x5 + p11_0*x5 - p22_0*x5
    M[6, 1] = b25*y8 + b6*y2 - p00_2*y5 + p11_2*y5 - p22_2*y5
    M[6, 2] = b0*y2 + b24*y8 + b26*x8 + b8*x2 - p00_0*y5 - p00_1*x5 + p11_0*y5 + p11_1*x5 - p22_0*y5 - p22_1*x5
    M[6, 3] = b25*x8 + b26*y8 + b6*x2 + b8*y2 - p00_1*y5 - p00_2*x5 + p11_1*y5 + p11_2*x5 - p22_1*y5 - p22_2*x5
    M[6, 4] = b0*z2 + b10*x2 + b24*z8 + b27*x8 - p00_0*z5 - p00_3*x5 + p11_0*z5 + p11_3*x5 - p22_0*z5 - p22_3*x5
    M[6, 5] = b0*w2 + b12*x2 + b24*w8 + b28*x8 - p00_0*w5 - p00_6*x5 + p11_0*w5 + p11_6*x5 - p22_0*w5 - p22_6*x5
    M[6, 6] = b14*y2 + b25*z8 + b29*y8 + b6*z2 - p00_2*z5 - p00_4*y5 + p11_2*z5 + p11_4*y5 - p22_2*z5 - p22_4*y5
    M[6, 7] = b16*y2 + b25*w8 + b30*y8 + b6*w2 - p00_2*w5 - p00_7*y5 + p11_2*w5 + p11_7*y5 - p22_2*w5 - p22_7*y5
    M[6, 8] = b10*y2 + b14*x2 + b26*z8 + b27*y8 + b29*x8 + b8*z2 - p00_1*z5 - p00_3*y5 - p00_4*x5 + p11_1*z5 + p11_3*y5 + p11_4*x5 - p22_1*z5 - p22_3*y5 - p22_4*x5
    M[6, 9] = b12*y2 + b16*x2 + b26*w8 + b28*y8 + b30*x8 + b8*w2 - p00_1*w5 - p00_6*y5 - p00_7*x5 + p11_1*w5 + p11_6*y5 + p11_7*x5 - p22_1*w5 - p22_6*y5 - p22_7*x5
    M[6, 10] = b10*z2 + b18*x2 + b27*z8 + b31*x8 - p00_3*z5 - p00_5*x5 + p11_3*z5 + p11_5*x5 - p22_3*z5 - p22_5*x5
    M[6, 11] = b10*w2 + b12*z2 + b20*x2 + b27*w8 + b28*z8 + b32*x8 - p00_3*w5 - p00_6*z5 - p00_8*x5 + p11_3*w5 + p11_6*z5 + p11_8*x5 - p22_3*w5 - p22_6*z5 - p22_8*x5
    M[6, 12] = b12*w2 + b22*x2 + b28*w8 + b33*x8 - p00_6*w5 - p00_9*x5 + p11_6*w5 + p11_9*x5 - p22_6*w5 - p22_9*x5
    M[6, 13] = b14*z2 + b18*y2 + b29*z8 + b31*y8 - p00_4*z5 - p00_5*y5 + p11_4*z5 + p11_5*y5 - p22_4*z5 - p22_5*y5
    M[6, 14] = b14*w2 + b16*z2 + b20*y2 + b29*w8 + b30*z8 + b32*y8 - p00_4*w5 - p00_7*z5 - p00_8*y5 + p11_4*w5 + p11_7*z5 + p11_8*y5 - p22_4*w5 - p22_7*z5 - p22_8*y5
    M[6, 15] = b16*w2 + b22*y2 + b30*w8 + b33*y8 - p00_7*w5 - p00_9*y5 + p11_7*w5 + p11_9*y5 - p22_7*w5 - p22_9*y5
    M[6, 16] = b18*z2 + b31*z8 - p00_5*z5 + p11_5*z5 - p22_5*z5
    M[6, 17] = b18*w2 + b20*z2 + b31*w8 + b32*z8 - p00_5*w5 - p00_8*z5 + p11_5*w5 + p11_8*z5 - p22_5*w5 - p22_8*z5
    M[6, 18] = b20*w2 + b22*z2 + b32*w8 + b33*z8 - p00_8*w5 - p00_9*z5 + p11_8*w5 + p11_9*z5 - p22_8*w5 - p22_9*z5
    M[6, 19] = b22*w2 + b33*w8 - p00_9*w5 + p11_9*w5 - p22_9*w5
    M[7, 0] = b1*x0 + b4*p12_0 - p00_0*x6 - p11_0*x6 + p22_0*x6
    M[7, 1] = b2*p12_2 + b7*y0 - p00_2*y6 - p11_2*y6 + p22_2*y6
    M[7, 2] = b1*y0 + b2*p12_0 + b4*p12_1 + b9*x0 - p00_0*y6 - p00_1*x6 - p11_0*y6 - p11_1*x6 + p22_0*y6 + p22_1*x6
    M[7, 3] = b2*p12_1 + b4*p12_2 + b7*x0 + b9*y0 - p00_1*y6 - p00_2*x6 - p11_1*y6 - p11_2*x6 + p22_1*y6 + p22_2*x6
    M[7, 4] = b1*z0 + b11*x0 + b24*z3 + b4*p12_3 - p00_0*z6 - p00_3*x6 - p11_0*z6 - p11_3*x6 + p22_0*z6 + p22_3*x6
    M[7, 5] = b1*w0 + b13*x0 + b24*w3 + b4*p12_6 - p00_0*w6 - p00_6*x6 - p11_0*w6 - p11_6*x6 + p22_0*w6 + p22_6*x6
    M[7, 6] = b15*y0 + b2*p12_4 + b25*z3 + b7*z0 - p00_2*z6 - p00_4*y6 - p11_2*z6 - p11_4*y6 + p22_2*z6 + p22_4*y6
    M[7, 7] = b17*y0 + b2*p12_7 + b25*w3 + b7*w0 - p00_2*w6 - p00_7*y6 - p11_2*w6 - p11_7*y6 + p22_2*w6 + p22_7*y6
    M[7, 8] = b11*y0 + b15*x0 + b2*p12_3 + b26*z3 + b4*p12_4 + b9*z0 - p00_1*z6 - p00_3*y6 - p00_4*x6 - p11_1*z6 - p11_3*y6 - p11_4*x6 + p22_1*z6 + p22_3*y6 + p22_4*x6
    M[7, 9] = b13*y0 + b17*x0 + b2*p12_6 + b26*w3 + b4*p12_7 + b9*w0 - p00_1*w6 - p00_6*y6 - p00_7*x6 - p11_1*w6 - p11_6*y6 - p11_7*x6 + p22_1*w6 + p22_6*y6 + p22_7*x6
    M[7, 10] = b11*z0 + b19*x0 + b27*z3 + b4*p12_5 - p00_3*z6 - p00_5*x6 - p11_3*z6 - p11_5*x6 + p22_3*z6 + p22_5*x6
    M[7, 11] = b11*w0 + b13*z0 + b21*x0 + b27*w3 + b28*z3 + b4*p12_8 - p00_3*w6 - p00_6*z6 - p00_8*x6 - p11_3*w6 - p11_6*z6 - p11_8*x6 + p22_3*w6 + p22_6*z6 + p22_8*x6
    M[7, 12] = b13*w0 + b23*x0 + b28*w3 + b4*p12_9 - p00_6*w6 - p00_9*x6 - p11_6*w6 - p11_9*x6 + p22_6*w6 + p22_9*x6
    M[7, 13] = b15*z0 + b19*y0 + b2*p12_5 + b29*z3 - p00_4*z6 - p00_5*y6 - p11_4*z6 - p11_5*y6 + p22_4*z6 + p22_5*y6
    M[7, 14] = b15*w0 + b17*z0 + b2*p12_8 + b21*y0 + b29*w3 + b30*z3 - p00_4*w6 - p00_7*z6 - p00_8*y6 - p11_4*w6 - p11_7*z6 - p11_8*y6 + p22_4*w6 + p22_7*z6 + p22_8*y6
    M[7, 15] = b17*w0 + b2*p12_9 + b23*y0 + b30*w3 - p00_7*w6 - p00_9*y6 - p11_7*w6 - p11_9*y6 + p22_7*w6 + p22_9*y6
    M[7, 16] = b19*z0 + b31*z3 - p00_5*z6 - p11_5*z6 + p22_5*z6
    M[7, 17] = b19*w0 + b21*z0 + b31*w3 + b32*z3 - p00_5*w6 - p00_8*z6 - p11_5*w6 - p11_8*z6 + p22_5*w6 + p22_8*z6
    M[7, 18] = b21*w0 + b23*z0 + b32*w3 + b33*z3 - p00_8*w6 - p00_9*z6 - p11_8*w6 - p11_9*z6 + p22_8*w6 + p22_9*z6
    M[7, 19] = b23*w0 + b33*w3 - p00_9*w6 - p11_9*w6 + p22_9*w6
    M[8, 0] = b1*x1 + b24*x4 - p00_0*x7 - p11_0*x7 + p22_0*x7
    M[8, 1] = b25*y4 + b7*y1 - p00_2*y7 - p11_2*y7 + p22_2*y7
    M[8, 2] = b1*y1 + b24*y4 + b26*x4 + b9*x1 - p00_0*y7 - p00_1*x7 - p11_0*y7 - p11_1*x7 + p22_0*y7 + p22_1*x7
    M[8, 3] = b25*x4 + b26*y4 + b7*x1 + b9*y1 - p00_1*y7 - p00_2*x7 - p11_1*y7 - p11_2*x7 + p22_1*y7 + p22_2*x7
    M[8, 4] = b1*z1 + b11*x1 + b24*z4 + b27*x4 - p00_0*z7 - p00_3*x7 - p11_0*z7 - p11_3*x7 + p22_0*z7 + p22_3*x7
    M[8, 5] = b1*w1 + b13*x1 + b24*w4 + b28*x4 - p00_0*w7 - p00_6*x7 - p11_0*w7 - p11_6*x7 + p22_0*w7 + p22_6*x7
    M[8, 6] = b15*y1 + b25*z4 + b29*y4 + b7*z1 - p00_2*z7 - p00_4*y7 - p11_2*z7 - p11_4*y7 + p22_2*z7 + p22_4*y7
    M[8, 7] = b17*y1 + b25*w4 + b30*y4 + b7*w1 - p00_2*w7 - p00_7*y7 - p11_2*w7 - p11_7*y7 + p22_2*w7 + p22_7*y7
    M[8, 8] = b11*y1 + b15*x1 + b26*z4 + b27*y4 + b29*x4 + b9*z1 - p00_1*z7 - p00_3*y7 - p00_4*x7 - p11_1*z7 - p11_3*y7 - p11_4*x7 + p22_1*z7 + p22_3*y7 + p22_4*x7
    M[8, 9] = b13*y1 + b17*x1 + b26*w4 + b28*y4 + b30*x4 + b9*w1 - p00_1*w7 - p00_6*y7 - p00_7*x7 - p11_1*w7 - p11_6*y7 - p11_7*x7 + p22_1*w7 + p22_6*y7 + p22_7*x7
    M[8, 10] = b11*z1 + b19*x1 + b27*z4 + b31*x4 - p00_3*z7 - p00_5*x7 - p11_3*z7 - p11_5*x7 + p22_3*z7 + p22_5*x7
    M[8, 11] = b11*w1 + b13*z1 + b21*x1 + b27*w4 + b28*z4 + b32*x4 - p00_3*w7 - p00_6*z7 - p00_8*x7 - p11_3*w7 - p11_6*z7 - p11_8*x7 + p22_3*w7 + p22_6*z7 + p22_8*x7
    M[8, 12] = b13*w1 + b23*x1 + b28*w4 + b33*x4 - p00_6*w7 - p00_9*x7 - p11_6*w7 - p11_9*x7 + p22_6*w7 + p22_9*x7
    M[8, 13] = b15*z1 + b19*y1 + b29*z4 + b31*y4 - p00_4*z7 - p00_5*y7 - p11_4*z7 - p11_5*y7 + p22_4*z7 + p22_5*y7
    M[8, 14] = b15*w1 + b17*z1 + b21*y1 + b29*w4 + b30*z4 + b32*y4 - p00_4*w7 - p00_7*z7 - p00_8*y7 - p11_4*w7 - p11_7*z7 - p11_8*y7 + p22_4*w7 + p22_7*z7 + p22_8*y7
    M[8, 15] = b17*w1 + b23*y1 + b30*w4 + b33*y4 - p00_7*w7 - p00_9*y7 - p11_7*w7 - p11_9*y7 + p22_7*w7 + p22_9*y7
    M[8, 16] = b19*z1 + b31*z4 - p00_5*z7 - p11_5*z7 + p22_5*z7
    M[8, 17] = b19*w1 + b21*z1 + b31*w4 + b32*z4 - p00_5*w7 - p00_8*z7 - p11_5*w7 - p11_8*z7 + p22_5*w7 + p22_8*z7
    M[8, 18] = b21*w1 + b23*z1 + b32*w4 + b33*z4 - p00_8*w7 - p00_9*z7 - p11_8*w7 - p11_9*z7 + p22_8*w7 + p22_9*z7
    M[8, 19] = b23*w1 + b33*w4 - p00_9*w7 - p11_9*w7 + p22_9*w7
    M[9, 0] = b1*x2 + b24*x5 - p00_0*x8 - p11_0*x8 + p22_0*x8
    M[9, 1] = b25*y5 + b7*y2 - p00_2*y8 - p11_2*y8 + p22_2*y8
    M[9, 2] = b1*y2 + b24*y5 + b26*x5 + b9*x2 - p00_0*y8 - p00_1*x8 - p11_0*y8 - p11_1*x8 + p22_0*y8 + p22_1*x8
    M[9, 3] = b25*x5 + b26*y5 + b7*x2 + b9*y2 - p00_1*y8 - p00_2*x8 - p11_1*y8 - p11_2*x8 + p22_1*y8 + p22_2*x8
    M[9, 4] = b1*z2 + b11*x2 + b24*z5 + b27*x5 - p00_0*z8 - p00_3*x8 - p11_0*z8 - p11_3*x8 + p22_0*z8 + p22_3*x8
    M[9, 5] = b1*w2 + b13*x2 + b24*w5 + b28*x5 - p00_0*w8 - p00_6*x8 - p11_0*w8 - p11_6*x8 + p22_0*w8 + p22_6*x8
    M[9, 6] = b15*y2 + b25*z5 + b29*y5 + b7*z2 - p00_2*z8 - p00_4*y8 - p11_2*z8 - p11_4*y8 + p22_2*z8 + p22_4*y8
    M[9, 7] = b17*y2 + b25*w5 + b30*y5 + b7*w2 - p00_2*w8 - p00_7*y8 - p11_2*w8 - p11_7*y8 + p22_2*w8 + p22_7*y8
    M[9, 8] = b11*y2 + b15*x2 + b26*z5 + b27*y5 + b29*x5 + b9*z2 - p00_1*z8 - p00_3*y8 - p00_4*x8 - p11_1*z8 - p11_3*y8 - p11_4*x8 + p22_1*z8 + p22_3*y8 + p22_4*x8
    M[9, 9] = b13*y2 + b17*x2 + b26*w5 + b28*y5 + b30*x5 + b9*w2 - p00_1*w8 - p00_6*y8 - p00_7*x8 - p11_1*w8 - p11_6*y8 - p11_7*x8 + p22_1*w8 + p22_6*y8 + p22_7*x8
    M[9, 10] = b11*z2 + b19*x2 + b27*z5 + b31*x5 - p00_3*z8 - p00_5*x8 - p11_3*z8 - p11_5*x8 + p22_3*z8 + p22_5*x8
    M[9, 11] = b11*w2 + b13*z2 + b21*x2 + b27*w5 + b28*z5 + b32*x5 - p00_3*w8 - p00_6*z8 - p00_8*x8 - p11_3*w8 - p11_6*z8 - p11_8*x8 + p22_3*w8 + p22_6*z8 + p22_8*x8
    M[9, 12] = b13*w2 + b23*x2 + b28*w5 + b33*x5 - p00_6*w8 - p00_9*x8 - p11_6*w8 - p11_9*x8 + p22_6*w8 + p22_9*x8
    M[9, 13] = b15*z2 + b19*y2 + b29*z5 + b31*y5 - p00_4*z8 - p00_5*y8 - p11_4*z8 - p11_5*y8 + p22_4*z8 + p22_5*y8
    M[9, 14] = b15*w2 + b17*z2 + b21*y2 + b29*w5 + b30*z5 + b32*y5 - p00_4*w8 - p00_7*z8 - p00_8*y8 - p11_4*w8 - p11_7*z8 - p11_8*y8 + p22_4*w8 + p22_7*z8 + p22_8*y8
    M[9, 15] = b17*w2 + b23*y2 + b30*w5 + b33*y5 - p00_7*w8 - p00_9*y8 - p11_7*w8 - p11_9*y8 + p22_7*w8 + p22_9*y8
    M[9, 16] = b19*z2 + b31*z5 - p00_5*z8 - p11_5*z8 + p22_5*z8
    M[9, 17] = b19*w2 + b21*z2 + b31*w5 + b32*z5 - p00_5*w8 - p00_8*z8 - p11_5*w8 - p11_8*z8 + p22_5*w8 + p22_8*z8
    M[9, 18] = b21*w2 + b23*z2 + b32*w5 + b33*z5 - p00_8*w8 - p00_9*z8 - p11_8*w8 - p11_9*z8 + p22_8*w8 + p22_9*z8
    M[9, 19] = b23*w2 + b33*w5 - p00_9*w8 - p11_9*w8 + p22_9*w8
    return M
