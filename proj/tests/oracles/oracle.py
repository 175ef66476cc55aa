"""Independent exact oracles used to freeze expected values in the C++ tests.

Written from first principles with fractions.Fraction; shares no code with the
library. Run: python3 tests/oracles/oracle.py
"""
from fractions import Fraction as Q
from itertools import product


def axes(d, n):
    # mixed radix, axis 0 least significant
    r = d - 1
    out = []
    for _ in range(n):
        out.append(r % 4)
        r //= 4
    return out


def box(code, n):
    lo = [Q(0)] * n
    w = Q(1)
    for d in code:
        w /= 4
        for j, q in enumerate(axes(d, n)):
            lo[j] += q * w
    return [(l, l + w) for l in lo]


def gap2(a, b, n):
    s = Q(0)
    for (la, ua), (lb, ub) in zip(box(a, n), box(b, n)):
        g = max(Q(0), la - ub, lb - ua)
        s += g * g
    return s


def base4(x, k):
    # upper-closed digits: x in (q/4,(q+1)/4], 0 in the first part
    out = []
    for _ in range(k):
        if x == 0:
            out.append(1)
            continue
        q = 0
        while not (Q(q, 4) < x <= Q(q + 1, 4)):
            q += 1
        out.append(q + 1)
        x = 4 * x - q
    return out


def tent(x):
    if x <= Q(1, 4):
        return 1, 4 * x
    if x <= Q(1, 2):
        return 2, 4 * (Q(1, 2) - x)
    if x <= Q(3, 4):
        return 3, 4 * (x - Q(1, 2))
    return 4, 4 * (1 - x)


def itinerary(x, k):
    out = []
    for _ in range(k):
        b, x = tent(x)
        out.append(b)
    return out


def interval_forward(code):
    # Forward preimage intersection: keep the affine map g = phi^(p-1) on I.
    lo, hi = Q(0), Q(1)
    a, b = Q(1), Q(0)
    rules = {1: (4, 0), 2: (-4, 2), 3: (4, -2), 4: (-4, 4)}
    for d in code:
        tlo, thi = Q(d - 1, 4), Q(d, 4)
        xs = sorted([(tlo - b) / a, (thi - b) / a])
        lo, hi = max(lo, xs[0]), min(hi, xs[1])
        ra, rb = rules[d]
        a, b = ra * a, ra * b + rb
    return lo, hi


if __name__ == "__main__":
    print("digit_to_axes(8,2) =", axes(8, 2))
    print("dist2 n=1 (1),(3) =", gap2([1], [3], 1))
    print("dist2 n=1 (1),(4) =", gap2([1], [4], 1))
    print("dist2 n=1 (2),(4) =", gap2([2], [4], 1))
    print("dist2 n=1 (1),(2) =", gap2([1], [2], 1))
    print("dist2 n=2 (1),(16) =", gap2([1], [16], 2))
    print("box n=1 (1,2) =", box([1, 2], 1))
    print("encode 1/3 k=3 =", base4(Q(1, 3), 3))
    print("decode (3,3) =", box([3, 3], 1)[0][0])
    print("dense length n=1 q=1,2,3 =", [sum(j * 4 ** j for j in range(1, q + 1)) for q in (1, 2, 3)])
    print("dense length n=2 q=2 =", sum(j * 16 ** j for j in range(1, 3)))
    print("itinerary 1/3 k=4 =", itinerary(Q(1, 3), 4))
    print("itinerary 1 k=2 =", itinerary(Q(1), 2))
    print("interval (2,1) =", interval_forward([2, 1]))
    print("interval (1,1) =", interval_forward([1, 1]))
    print("interval (3) =", interval_forward([3]))
    print("interval (4,1,2) =", interval_forward([4, 1, 2]))
    print("box n=1 (2,3) =", box([2, 3], 1))
    print("box n=1 (4,1,2) =", box([4, 1, 2], 1))
    # periodic (3) x 10 decode
    print("decode (3)^10 =", box([3] * 10, 1)[0][0], "2/3 - that =", Q(2, 3) - box([3] * 10, 1)[0][0])
    # separation n=2: min over i of max_j dist2, and each i has a partner >= 2/16
    for n in (1, 2, 3):
        m = 4 ** n
        best = [max(gap2([i], [j], n) for j in range(1, m + 1)) for i in range(1, m + 1)]
        first = [next(j for j in range(1, m + 1) if gap2([i], [j], n) >= Q(n, 16)) for i in range(1, m + 1)]
        print(f"separation n={n}: min max =", min(best), "first partners head =", first[:8])
    # farthest digit per i for n=1,2
    for n in (1, 2):
        m = 4 ** n
        far = [max(range(1, m + 1), key=lambda j: (gap2([i], [j], n), -j)) for i in range(1, m + 1)]
        print(f"farthest n={n}:", far)
    # all 1D codes of order <= 3: forward interval == box? (shows orientation differs from base-4)
    print("interval (2,1,1) =", interval_forward([2, 1, 1]), "interval (2,4) =", interval_forward([2, 4]))
    # Li-Yorke n=1 m=1 base (1,1): codeB
    print("liyorke m=1 n=1 base(1,1) -> B = [1,", max(range(1, 5), key=lambda j: (gap2([1], [j], 1), -j)), "]")
