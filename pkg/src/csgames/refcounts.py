"""Published reference counts used by the verification suites."""

# Complete simple games with three types of voters, n = 4..21.
CG_T3 = {
    4: 6,
    5: 50,
    6: 262,
    7: 1114,
    8: 4278,
    9: 15769,
    10: 58147,
    11: 221089,
    12: 886411,
    13: 3806475,
    14: 17681979,
    15: 89337562,
    16: 492188528,
    17: 2959459154,
    18: 19424078142,
    19: 139141985438,
    20: 1087614361775,
    21: 9274721292503,
}

# Larger (n, t) values known exactly; only the first two are desk-scale.
CG_LARGE = {
    (10, 4): 4570902,
    (11, 4): 59776637,
    (12, 4): 1047858496,
    (13, 4): 26000281487,
    (10, 5): 412734188,
    (11, 5): 29086472429,
    (10, 6): 42427707348,
}

# Three-type counts of games with a vetoer, n = 4..13.
CGV_T3 = {n: v for n, v in zip(range(4, 14), (2, 11, 37, 98, 225, 470, 919, 1713, 3082, 5400))}

# Four-type counts of games with a vetoer and a null, n = 5..14.
CGVN_T4 = {n: v for n, v in zip(range(5, 15), (1, 8, 35, 113, 303, 717, 1552, 3145, 6062, 11242))}
