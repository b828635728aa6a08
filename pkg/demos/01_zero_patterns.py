# %% [markdown]
# # Which zero patterns can a unitary matrix have?
#
# A 0/1 matrix is read as a digraph: row i lists the out-neighbours of
# vertex i. Orthogonality of rows puts combinatorial constraints on that
# digraph, and this script walks through the three checks the library offers.

# %%
import numpy as np

from unitary_digraphs import (
    fourier_matrix,
    is_quadrangular,
    is_specular,
    is_strongly_quadrangular,
    synthesize_specular,
)

triangle = np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]])

# %% [markdown]
# Two rows of the triangle share a single column. Two orthogonal vectors
# cannot overlap in exactly one coordinate, so the pattern is ruled out.

# %%
print("triangle quadrangular:", is_quadrangular(triangle))

# %% [markdown]
# The pairwise test is not the whole story. Below, every pair of rows
# overlaps in zero, two or four columns, yet rows 0, 2 and 3 crowd into
# columns {0, 1}: three orthonormal vectors cannot live in two coordinates.

# %%
crowded = np.array([[1, 1, 1, 1], [1, 1, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]])
print("quadrangular:", is_quadrangular(crowded)[0])
ok, witness = is_strongly_quadrangular(crowded)
print("strongly quadrangular:", ok, "witness:", witness)

# %% [markdown]
# When rows are pairwise equal or disjoint (and columns too) the pattern
# splits into all-ones blocks. Square blocks are filled with Fourier
# matrices, which gives an explicit unitary.

# %%
c4 = np.array([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
ok, blocks = is_specular(c4)
print("blocks:", blocks.blocks)
cert = synthesize_specular(c4)
print(np.round(cert.matrix, 3))
print("residual:", cert.unitarity_residual, "valid:", cert.valid)
assert np.allclose(cert.matrix[np.ix_([0, 2], [1, 3])], fourier_matrix(2))
