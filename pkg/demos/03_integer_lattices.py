"""The exact integer linear algebra underneath the engine.

Smith normal form with unimodular transforms, integer kernels, solving
inside lattices, and invariant factors of quotients. All arithmetic is on
unbounded Python integers; nothing is ever rounded.
"""

from twistedhom import (
    AbelianGroupStructure,
    IntMatrix,
    kernel_basis,
    lattice_quotient,
    snf,
    solve_in_lattice,
)

# Smith normal form: U * A * V = D with unimodular U, V and a divisibility
# chain down the diagonal of D.
a = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
res = snf(a)
print("diagonal:", res.diagonal())
print("U A V == D:", res.U * a * res.V == res.D)
print("det U, det V:", res.U.det(), res.V.det())

# The diagonal is exactly the invariant-factor data of the cokernel:
# Z^3 / (column lattice of a).
print("cokernel:", lattice_quotient(IntMatrix.identity(3), a))

# Integer kernels come out saturated: the basis extends to a basis of the
# ambient Z^n, so quotients by sublattices of the kernel are computed in
# kernel coordinates without losing torsion.
b = IntMatrix.from_rows([[1, 2, 3], [2, 4, 6]])  # rank 1
k = kernel_basis(b)
print("\nkernel columns:", [k.column(j) for j in range(k.cols)])
print("B * K == 0:", (b * k).is_zero())

# Solving inside a lattice either produces exact integer coordinates or
# reports that the target is outside; no tolerance is involved.
basis = IntMatrix.from_columns(3, [(2, 0, 1), (0, 3, 1)])
print("\nsolve (2, 3, 2):", solve_in_lattice(basis, (2, 3, 2)))
print("solve (1, 0, 0):", solve_in_lattice(basis, (1, 0, 0)))

# Quotients of one lattice by a sublattice: the engine's H^1 and H_1 both
# reduce to this single operation.
ambient = IntMatrix.identity(2)
sub = IntMatrix.from_columns(2, [(2, 0), (0, 2)])
print("\nZ^2 / 2Z^2 =", lattice_quotient(ambient, sub))

# Sums of cyclic groups are canonicalized into invariant factors.
print("Z/2 + Z/3 canonically:", AbelianGroupStructure.from_cyclic_orders([2, 3]))
print("Z/4 + Z/6 canonically:", AbelianGroupStructure.from_cyclic_orders([4, 6]))
