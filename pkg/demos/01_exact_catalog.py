"""Demo: the built-in states and their exact integer structure.

The two flagship states live on C^3 (x) C^3 and are stored as integer
matrices over the common denominator 13. That makes two things exact that
are usually only numerical: the rank computation (fraction-free elimination
over the integers) and the partial transpose (a pure index permutation).
"""

import numpy as np

from pptedge import exact_rank, numeric_rank, partial_transpose, rho_5_5, rho_6_6

np.set_printoptions(linewidth=140, suppress=True)

for entry in (rho_5_5(), rho_6_6()):
    print("=" * 70)
    print(f"state {entry.name}   (denominator {entry.denominator})")
    numerator = np.real(entry.exact.to_complex()).astype(int)
    print(numerator)

    # Exact ranks never touch floating point; the numeric path must agree.
    print(f"exact rank            : {exact_rank(entry.exact)}")
    print(f"exact rank of PT      : {exact_rank(entry.exact_pt)}")
    print(f"numeric rank          : {numeric_rank(entry.state.matrix)}")
    pt = partial_transpose(entry.state)
    print(f"numeric rank of PT    : {numeric_rank(pt.matrix)}")

    # The partial transpose of integer entries is again integer, bit-exact.
    pt_numerator = 13.0 * pt.matrix
    assert np.array_equal(pt_numerator, np.real(pt_numerator).astype(int).astype(complex))
    print("partial transpose (numerator):")
    print(np.real(pt_numerator).astype(int))

    spectrum = np.linalg.eigvalsh(entry.state.matrix)
    print(f"spectrum              : {np.round(spectrum, 6)}")
    print(f"smallest eigenvalue   : {spectrum[0]:.2e}  (PSD)")
