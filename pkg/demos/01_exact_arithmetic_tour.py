"""
Exact-arithmetic primitives behind the placement counts
=======================================================

Binomials extended to negative arguments, Stirling numbers of both kinds,
and Ward's associated Stirling numbers.  Everything here is plain Python
integers, so nothing ever overflows or rounds.
"""

from chesscount import (
    assoc_stirling2,
    binomial,
    falling_factorial,
    stirling1_unsigned,
    stirling2,
)

# The familiar Pascal triangle sits in the upper-right quadrant.
print("classic row n=5: ", [binomial(5, k) for k in range(6)])

# Negative upper arguments follow the extension that preserves Pascal's
# rule.  Row n=-1 alternates signs, which is what makes several closed
# forms collapse so neatly.
print("extended row n=-1:", [binomial(-1, k) for k in range(6)])

# Pascal's rule survives the extension at every point except the origin.
for n in range(-4, 5):
    for k in range(-4, 5):
        lhs = binomial(n, k)
        rhs = binomial(n - 1, k) + binomial(n - 1, k - 1)
        assert lhs == rhs or (n, k) == (0, 0)
print("Pascal's rule holds on [-4,4]^2 away from the origin")

# Stirling numbers of the second kind count set partitions; extended to
# negative pairs they turn into unsigned first-kind numbers (cycle counts).
print("partitions of 4 elements into 2 blocks:", stirling2(4, 2))
print("stirling2(-2,-3) == cycles c(3,2):      ", stirling2(-2, -3), "==",
      stirling1_unsigned(3, 2))

# Ward numbers count partitions with every block of size at least two.
# They appear when a count is re-expanded around its saturated diagonal.
print("pairings of 4 elements, blocks >= 2:    ", assoc_stirling2(4, 2))

# Falling factorials give the ordered-selection counts that divide the
# anassa polynomials exactly (see demo 04).
print("falling_factorial(7, 3) =", falling_factorial(7, 3), "= 7*6*5")
