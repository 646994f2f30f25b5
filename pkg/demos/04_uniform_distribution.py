"""
Uniform distribution of a coordinate
====================================

Every coordinate function pushes Lebesgue measure on [0, 1] to Lebesgue
measure.  At triadic scales this shows up as exactly equal bin counts.
"""

from peanocurve.analysis import census_table, histogram

for n in (2, 3, 4):
    print("census n=%d" % n, census_table(n))

print(histogram(2, 1, 4, 2))
print(histogram(3, 3, 3, 1))

# Putting corner values that sit on a bin edge into the upper bin instead
# tilts the counts; each parameter cell's image is one closed triadic
# interval, and its left corner can be the top of that interval.
print(histogram(2, 1, 3, 1, boundary="upper"))
