"""
Palindromic structure encodings
===============================

Two equal-length strings pal-match when every window of one is a
palindrome exactly when the same window of the other is.  This script
walks the encodings that turn that relation into plain equality.
"""

import sys

try:
    from palfm import palcore, oracle
except ImportError:
    sys.path.insert(0, "src")
    from palfm import palcore, oracle


def show(name, values):
    print("%-6s %s" % (name, " ".join("inf" if v == palcore.INF else str(v)
                                      for v in values)))


# "aba" and "cdc" share their palindromic windows, so they pal-match even
# though no character agrees
print("pal_windows('aba') =", sorted(oracle.pal_windows("aba")))
print("pal_windows('cdc') =", sorted(oracle.pal_windows("cdc")))
print("pal_match:", oracle.pal_match("aba", "cdc"))
print()

# the ssp encoding: per prefix, length of the shortest suffix-palindrome
# of length >= 2, or inf when only trivial ones exist
w = "abbbabb"
print("w =", w)
show("lpal", palcore.lpal(w))
show("lpal2", palcore.lpal_second(w))
show("ssp", palcore.ssp(w))
print()

# equality of ssp encodings is exactly the pal-match relation
x, y = "abbabb", "baabaa"
print("%s vs %s" % (x, y))
show("ssp x", palcore.ssp(x))
show("ssp y", palcore.ssp(y))
print("encodings equal:", palcore.ssp(x) == palcore.ssp(y))
print("pal_match:      ", oracle.pal_match(x, y))
print()

# ssp values can be as large as the prefix, which is bad for an index
# alphabet; sspg renames each value by the identifier of the group of
# suffix-palindromes it extends, and group counts stay tiny
w = "babbbabb"
print("w =", w)
show("ssp", palcore.ssp(w))
show("sspg", palcore.sspg(w))
show("groups", palcore.group_counts(w))

# the groups behind the numbers, prefix by prefix
for j in (3, 5, 8):
    groups, boundary = oracle.groups_naive(w)[j - 1]
    print("prefix %r: %s%s" % (w[:j],
                               ", ".join("id %d keyed %r lengths %s"
                                         % (gid, key, lens)
                                         for gid, (key, lens)
                                         in enumerate(groups, 1)),
                               "" if boundary is None
                               else " (+ whole-prefix palindrome)"))
