# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see reference.py for the shape contract."""
import numpy as np


def witness_value(double[:, :, :, :, ::1] wr, double[:, ::1] n1,
                  double[:, ::1] n2, double[:, ::1] m1, double[:, ::1] m2):
    cdef double a1[4][2]
    cdef double a2[4][2]
    cdef int i, s, j, ya, yb
    cdef double q1, q2, total
    for i in range(4):
        for s in range(2):
            a1[i][s] = (n1[i, 0] * m1[s, 0] + n1[i, 1] * m1[s, 1]
                        + n1[i, 2] * m1[s, 2])
            a2[i][s] = (n2[i, 0] * m2[s, 0] + n2[i, 1] * m2[s, 1]
                        + n2[i, 2] * m2[s, 2])
    total = 0.0
    for s in range(2):
        for i in range(4):
            for j in range(4):
                for ya in range(2):
                    q1 = 0.5 * (1.0 + (1 - 2 * ya) * a1[i][s])
                    for yb in range(2):
                        q2 = 0.5 * (1.0 + (1 - 2 * yb) * a2[j][s])
                        total += wr[s, i, j, ya, yb] * q1 * q2
    return total


def oracle_max_totals(long long[:, :, :, ::1] weights):
    cdef long long w[8][4]
    cdef long long best, tot
    cdef int e1, e2, i, j, s, y, d, c
    cdef int enc1[4]
    cdef int enc2[4]
    totals_arr = np.empty((16, 16), dtype=np.int64)
    cdef long long[:, ::1] totals = totals_arr
    for e1 in range(16):
        for i in range(4):
            enc1[i] = (e1 >> (3 - i)) & 1
        for e2 in range(16):
            for j in range(4):
                enc2[j] = (e2 >> (3 - j)) & 1
            for c in range(8):
                for y in range(4):
                    w[c][y] = 0
            for s in range(2):
                for i in range(4):
                    for j in range(4):
                        c = 4 * s + 2 * enc1[i] + enc2[j]
                        for y in range(4):
                            w[c][y] += weights[s, i, j, y]
            best = -1
            for d in range(65536):
                tot = (w[0][d & 3] + w[1][(d >> 2) & 3] + w[2][(d >> 4) & 3]
                       + w[3][(d >> 6) & 3] + w[4][(d >> 8) & 3]
                       + w[5][(d >> 10) & 3] + w[6][(d >> 12) & 3]
                       + w[7][(d >> 14) & 3])
                if tot > best:
                    best = tot
            totals[e1, e2] = best
    return totals_arr
