"""Independent cross-check oracle: a straight register-machine transliteration.

Deliberately structured unlike the library: no materialized schedules, the
key register advances by a double rotation per round, the unit register is a
pair of running accumulators, and the tweak register rotates in lockstep.
Only shares the problem definition with the code under test.
"""


def oracle_encrypt(block, key, tweak, unit_key, w):
    mask = (1 << w) - 1
    h = w // 2

    def o(x, y, e):
        return (2 * x * y + (1 - 2 * e) * (x - y + e)) & mask

    def rotl(x):
        return ((x << h) | (x >> (w - h))) & mask

    def g(x, z0, z1, u0, u1, t):
        x = o(x, z0, u0)
        x = rotl(x)
        x ^= t
        x = o(x, z1, u1)
        return rotl(x)

    x0, x1, x2, x3 = block
    z0, z1, z2, z3, z4 = key
    t0, t1, t2, t3 = tweak
    u = unit_key
    u0 = u
    u1 = (3 * u + 1) & mask
    for k in range(32):
        if k & 8:
            x3 ^= x0
            x0 = g(x0, z3, z4, u0, u1, t0)
        else:
            x0 = g(x0, z3, z4, u0, u1, t0)
            x1 ^= x0
        x0, x1, x2, x3 = x1, x2, x3, x0
        z0, z1, z2, z3, z4 = z2, z3, z4, z0, z1
        t0, t1, t2, t3 = t1, t2, t3, t0
        u0 = (u1 + 2 * u + 1) & mask
        u1 = (u0 + 2 * u + 1) & mask
    return x0, x1, x2, x3
