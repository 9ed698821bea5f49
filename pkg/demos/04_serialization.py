"""
Index files on disk
===================

Round-trips an index through its byte image and shows that damage to any
part of the file is caught at load time.
"""

import random
import sys
import tempfile

try:
    import palfm
except ImportError:
    sys.path.insert(0, "src")
    import palfm

idx = palfm.build("abbabbcbc", delta=2)
image = palfm.serialize(idx)
print("image: %d bytes, header %r" % (len(image), image[:8]))

with tempfile.NamedTemporaryFile(suffix=".idx") as fh:
    fh.write(image)
    fh.flush()
    with open(fh.name, "rb") as back:
        loaded = palfm.deserialize(back.read())

print("reload count('bb') =", loaded.count("bb"))
print("byte-identical after reload:", palfm.serialize(loaded) == image)
print()

# flip one bit somewhere in the middle and watch the checksum object
rng = random.Random(0)
for _ in range(5):
    pos = rng.randrange(len(image))
    damaged = bytearray(image)
    damaged[pos] ^= 1 << rng.randrange(8)
    try:
        palfm.deserialize(bytes(damaged))
        print("byte %3d: NOT DETECTED (bug)" % pos)
    except palfm.IndexFormatError as e:
        print("byte %3d: %s: %s" % (pos, type(e).__name__, e))
