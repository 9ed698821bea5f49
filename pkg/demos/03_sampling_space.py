"""
Sampling rate against space and locate cost
===========================================

The index stores suffix starts only at every delta-th text position and
reconstructs the rest by walking LF.  Larger delta means a smaller image
and slower locate.
"""

import random
import sys
import time

try:
    import palfm
except ImportError:
    sys.path.insert(0, "src")
    import palfm

rng = random.Random(2)
n = 5000
text = "".join(rng.choice("abcd") for _ in range(n))
pattern = text[1200:1210]

print("n = %d, pattern of length %d" % (n, len(pattern)))
print("delta  bits/symbol  samples  locate ms  occurrences")
for delta in (1, 4, 16, 64, 256):
    idx = palfm.build(text, delta=delta)
    st = idx.stats()
    t0 = time.perf_counter()
    occ = idx.locate(pattern)
    ms = (time.perf_counter() - t0) * 1e3
    print("%5d  %11.1f  %7d  %9.2f  %d"
          % (delta, st["bits_per_symbol"], st["samples"], ms, len(occ)))

# the count side never touches the samples, so it is delta-independent
idx1 = palfm.build(text, delta=1)
idx256 = palfm.build(text, delta=256)
assert idx1.count(pattern) == idx256.count(pattern)
assert idx1.locate(pattern) == idx256.locate(pattern)
print()
print("locate results identical across deltas")
