"""Tour of the matrix constructions.

The star of the show is the n x n matrix with entry min(i, j). Two
generalizations are driven by an increment list: the delta matrix,
whose entries are prefix sums mirrored across the diagonal, and the
theta companion matrix, which is one row/column smaller and shifts the
prefix pattern. Unit increments recover the min matrix; increments
(k, 1, ..., 1) recover the shifted matrix with top-left entry k.
"""

from minmatrix import (
    build_c_matrix,
    build_delta_matrix,
    build_min_matrix,
    build_theta_matrix,
    prefix_sums,
)


def show(title, matrix):
    print(f"\n{title}")
    for row in matrix.to_lists():
        print("   ", row)


print("The 5x5 min matrix:")
show("A_5", build_min_matrix(5))

show("C_{6,3} (shifted, top-left entry 3)", build_c_matrix(6, 3))

inc = [2, 3, 4]
print(f"\nIncrements {inc} have prefix sums {prefix_sums(inc)}.")
show("Delta matrix of (2, 3, 4)", build_delta_matrix(inc))
show("Theta matrix of (2, 3, 4)", build_theta_matrix(inc))

print("\nUnit increments reproduce the min matrix:")
print("   ", build_delta_matrix([1] * 4) == build_min_matrix(4))

print("Shift increments reproduce the shifted matrix:")
print("   ", build_delta_matrix([3, 1, 1, 1]) == build_c_matrix(6, 3))
