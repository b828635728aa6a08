# %% [markdown]
# # Line digraphs, Euler circuits and a coined walk
#
# The line digraph L(D) has one vertex per arc of D, with a -> b whenever
# a ends where b starts. Its pattern is the support of a unitary exactly
# when every vertex of D has equal in- and out-degree.

# %%
import numpy as np

from unitary_digraphs import (
    Digraph,
    euler_circuit,
    generate,
    hamiltonian_cycle_in_line_digraph,
    is_degree_balanced,
    line_digraph,
    pattern_of,
    synthesize_coined,
    verify_hamiltonian_cycle,
)
from unitary_digraphs.walk import run

D = Digraph(2, ((0, 0), (0, 1), (1, 0)))
L, labels = line_digraph(D)
print("balanced:", is_degree_balanced(D))
print(pattern_of(L))

# %% [markdown]
# The coined construction places one Fourier coin per vertex v, mixing the
# arcs entering v into the arcs leaving v.

# %%
cert, _ = synthesize_coined(D)
print(np.round(cert.matrix, 3))
print("valid:", cert.valid)

# %% [markdown]
# L(D) need not be balanced itself, so the construction cannot be iterated:

# %%
print("L(D) balanced:", is_degree_balanced(L))
try:
    synthesize_coined(L)
except ValueError as exc:
    print("rejected:", exc)

# %% [markdown]
# An Euler circuit of D visits every arc once; read as vertices of L(D) it
# is a Hamiltonian cycle.

# %%
G = generate("random_strongly_connected_balanced", 6, seed=4, max_arcs=14)
circuit = euler_circuit(G)
cycle = hamiltonian_cycle_in_line_digraph(G)
print("circuit:", circuit)
print("hamiltonian in L(G):", verify_hamiltonian_cycle(line_digraph(G)[0], cycle))

# %% [markdown]
# The same unitary drives a quantum walk on the arcs. Probabilities are
# reported per vertex; on a directed cycle the walker simply rotates.

# %%
for t, d in enumerate(run(generate("directed_cycle", 4), 5, "arc:0")):
    print(t, d.round(3))
dists = run(generate("petersen"), 200)
print("petersen, step 200:", dists[-1].round(3), "sum", dists[-1].sum())
