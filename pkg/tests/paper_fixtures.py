"""Tables transcribed from the source article, used as frozen fixtures."""
from fractions import Fraction as F

C10 = [
    [1],
    [0, 1],
    [1, -2, 2],
    [0, 5, -10, 6],
    [1, -10, 40, -54, 24],
    [0, 21, -140, 336, -336, 120],
    [1, -42, 462, -1764, 3024, -2400, 720],
    [0, 85, -1470, 8442, -22176, 29520, -19440, 5040],
    [1, -170, 4580, -38178, 144648, -288000, 313200, -176400, 40320],
]

A10 = [
    [F(1)],
    [F(0), F(1)],
    [F(-1, 2), F(1), F(1, 2)],
    [F(-5, 6), F(5, 6), F(5, 6), F(1, 6)],
    [F(-13, 12), F(5, 8), F(25, 24), F(3, 8), F(1, 24)],
    [F(-77, 60), F(49, 120), F(7, 6), F(7, 12), F(7, 60), F(1, 120)],
    [F(-29, 20), F(7, 36), F(889, 720), F(7, 9), F(77, 360), F(1, 36), F(1, 720)],
    [F(-223, 140), F(-4, 315), F(101, 80), F(229, 240), F(13, 40), F(7, 120), F(3, 560),
     F(1, 5040)],
    [F(-481, 280), F(-61, 288), F(1271, 1008), F(427, 384), F(853, 1920), F(19, 192),
     F(17, 1344), F(1, 1152), F(1, 40320)],
]

# worked m = 10 instance of the binomial system
BINOMIAL_M10 = [
    [1, 3, 6, 10, 15, 21, 28, 36, 45],
    [1, 4, 10, 20, 35, 56, 84, 120, 165],
    [1, 5, 15, 35, 70, 126, 210, 330, 495],
    [1, 6, 21, 56, 126, 252, 462, 792, 1287],
    [1, 7, 28, 84, 210, 462, 924, 1716, 3003],
    [1, 8, 36, 120, 330, 792, 1716, 3432, 6435],
    [1, 9, 45, 165, 495, 1287, 3003, 6435, 12870],
    [1, 10, 55, 220, 715, 2002, 5005, 11440, 24310],
    [1, 11, 66, 286, 1001, 3003, 8008, 19448, 43758],
]
RHS_M10 = [511, 9841, 87381, 488281, 2015539, 6725601, 19173961, 48427561, 111111111]
SOLUTION_M10 = [1, -170, 4580, -38178, 144648, -288000, 313200, -176400, 40320]
