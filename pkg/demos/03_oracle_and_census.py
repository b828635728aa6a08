# %% [markdown]
# # A numerical oracle and the 3x3 census
#
# Combinatorics rules patterns out; to rule one in we need a matrix. The
# oracle alternates between the nearest unitary and the nearest matrix
# with the requested zeros. It answers Infeasible only with a combinatorial
# witness, Feasible only with a checked certificate, and Unknown otherwise.

# %%
import numpy as np

from unitary_digraphs import OracleParams, decide
from unitary_digraphs.reports import census

one_zero = np.array([[1, 1, 0], [1, 1, 1], [1, 1, 1]])
v = decide(one_zero, OracleParams(seed=0))
print(v.kind, "after", v.iterations, "iterations")
print(np.round(v.certificate.matrix, 3))

# %% [markdown]
# This pattern is not built from blocks, so the constructive methods do not
# apply, yet a unitary exists. Starved of iterations the oracle stays honest:

# %%
print(decide(one_zero, OracleParams(restarts=1, max_iters=1)))

# %% [markdown]
# Over every 3x3 pattern without a zero row or column, feasibility and the
# strong quadrangularity test agree.

# %%
rows, summary = census(3)
print(summary["well_formed"], "patterns", summary["verdicts"])
for combo, count in summary["combinations"].items():
    print(f"{count:4d}  {combo}")
