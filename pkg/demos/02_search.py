"""
Backward search over the index
==============================

Builds the index for a small text, prints its rows, and steps a pattern
through backward search, checking everything against brute force.
"""

import sys

try:
    import palfm
    from palfm import oracle, palcore
except ImportError:
    sys.path.insert(0, "src")
    import palfm
    from palfm import oracle, palcore

T = "abbabbcbc"
idx = palfm.build(T, delta=2)


def sym(code):
    if code == 0:
        return "$"
    if code == idx.K + 1:
        return "inf"
    return str(code)


print("T =", T)
print("row  start  F    L    LF")
for i in range(1, idx.n + 2):
    print("%3d  %5d  %-4s %-4s %3d"
          % (i, idx.sa_access(i), sym(idx.F.code_at(i)),
             sym(idx.L.code_at(i)), idx.lf(i)))
print()

# one backward step per pattern position, right to left
p = "abb"
prof = palcore.pattern_preprocess(p)
iv = palfm.PalInterval(1, idx.n + 1)
for i in range(len(p), 0, -1):
    iv = idx.backward_step(iv, prof.pi_arr[i - 1], prof.g_arr[i - 1])
    print("after %-4r interval [%d..%d] width %d"
          % (p[i - 1:], iv.b, iv.e, iv.width()))

print()
print("count(%r) = %d" % (p, idx.count(p)))
print("locate(%r) = %s" % (p, idx.locate(p)))
print("brute force = %s" % (oracle.naive_search(T, p),))

# matches need not share any character with the pattern
print()
for q in ("xyx", "zz", "qqq"):
    print("locate(%r) = %s" % (q, idx.locate(q)))
