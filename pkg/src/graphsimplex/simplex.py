"""Simplex geometry: embeddings from Laplacians, canonical Gram matrices,
dihedral angles and hyperacuteness, faces, circumsphere and volume.

A Simplex (the congruence class) is represented either by a centered vertex
matrix, by its canonical Gram pair (M, M^dagger), or by its squared-distance
matrix; conversions between the three are provided here. Equality of
Simplices is always tested through Grams or distances, never through raw
coordinates, which are unique only up to orthogonal maps and translations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .config import DEFAULT, Tolerances
from .errors import (
    DegenerateDistanceMatrixError,
    DegenerateSimplexError,
    DuplicateIndexError,
    EmptySubsetError,
    FaceTooSmallError,
    IndexOutOfRangeError,
)
from .graphs import LaplacianMatrix
from .resistance import FiedlerBlocks


@dataclass(frozen=True)
class SimplexEmbedding:
    """Centered vertex matrix, one column per vertex, (n-1) coordinates."""

    vertices: np.ndarray

    @property
    def n(self) -> int:
        return self.vertices.shape[1]

    @property
    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=1)

    def squared_distances(self) -> np.ndarray:
        g = self.vertices.T @ self.vertices
        sq = np.diag(g)
        d = sq[:, None] + sq[None, :] - 2.0 * g
        np.fill_diagonal(d, 0.0)
        return d


@dataclass(frozen=True)
class GramPair:
    """Canonical Gram matrix of a Simplex and its pseudoinverse.

    Both are symmetric PSD with kernel span{u} and rank n-1.
    """

    gram: np.ndarray
    pinv_gram: np.ndarray

    @property
    def n(self) -> int:
        return self.gram.shape[0]


def embed_from_laplacian(q: LaplacianMatrix) -> SimplexEmbedding:
    """Vertices (s_i)_k = (z_k)_i / sqrt(mu_k) over the nonzero eigenpairs,
    so that S^T S = Q^dagger and squared vertex distances equal the
    effective resistances."""
    dec = linalg.eigh(q.matrix)
    mu = dec.eigenvalues[:-1]  # descending, zero eigenvalue dropped
    z = dec.eigenvectors[:, :-1]
    s = z.T / np.sqrt(mu)[:, None]
    return SimplexEmbedding(vertices=s)


def canonical_gram(vertices, tol: Tolerances = DEFAULT) -> GramPair:
    """Canonical Gram pair of the Simplex spanned by the given vertex
    matrix (d x n, one column per vertex), for any representative: the
    result is invariant under rotations, reflections and translations."""
    s = np.asarray(getattr(vertices, "vertices", vertices), dtype=float)
    if s.ndim != 2:
        raise DegenerateSimplexError("vertex matrix must be 2-dimensional")
    n = s.shape[1]
    j = linalg.centering_projector(n)
    m = j @ (s.T @ s) @ j
    m = 0.5 * (m + m.T)
    try:
        pinv = linalg.pinv_kernel_u(m, tol)
    except Exception as exc:
        raise DegenerateSimplexError(
            f"vertices are affinely dependent (rank < {n - 1})"
        ) from exc
    return GramPair(gram=m, pinv_gram=pinv)


def gram_pair_from_pinv(pinv_gram, tol: Tolerances = DEFAULT) -> GramPair:
    """Gram pair of the Simplex whose canonical pseudoinverse Gram matrix is
    given (e.g. a Laplacian, or a non-hyperacute candidate)."""
    mdag = linalg.symmetrize(pinv_gram)
    return GramPair(gram=linalg.pinv_kernel_u(mdag, tol), pinv_gram=mdag)


def gram_pair_from_laplacian(q: LaplacianMatrix) -> GramPair:
    return GramPair(gram=q.pinv, pinv_gram=np.asarray(q.matrix))


ANGLE_LABELS = ("acute", "right", "obtuse")


@dataclass(frozen=True)
class PairAngle:
    i: int
    j: int
    cosine: float  # cos(pi - phi_ij)
    label: str


@dataclass(frozen=True)
class AngleClassification:
    pairs: tuple[PairAngle, ...]

    def label(self, i: int, j: int) -> str:
        i, j = min(i, j), max(i, j)
        for p in self.pairs:
            if (p.i, p.j) == (i, j):
                return p.label
        raise IndexOutOfRangeError(f"no pair ({i}, {j})")

    @property
    def has_obtuse(self) -> bool:
        return any(p.label == "obtuse" for p in self.pairs)


def dihedral_angles(gp: GramPair, tol: Tolerances = DEFAULT) -> AngleClassification:
    """Classify every dihedral angle from the sign of the pseudoinverse Gram
    entry: positive = obtuse, zero = right, negative = acute.

    cos(pi - phi_ij) = (M^dagger)_ij / sqrt((M^dagger)_ii (M^dagger)_jj).
    The sign dead-band is relative to the largest diagonal entry; right
    angles occur exactly (path graphs), so ties classify as right.
    """
    mdag = gp.pinv_gram
    n = gp.n
    diag = np.diag(mdag)
    band = tol.validation * float(diag.max())
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            entry = mdag[i, j]
            cosine = float(entry / math.sqrt(diag[i] * diag[j]))
            if entry > band:
                label = "obtuse"
            elif entry < -band:
                label = "acute"
            else:
                label = "right"
            pairs.append(PairAngle(i=i, j=j, cosine=cosine, label=label))
    return AngleClassification(pairs=tuple(pairs))


def is_hyperacute(gp: GramPair, tol: Tolerances = DEFAULT) -> bool:
    """True iff no dihedral angle is obtuse; equivalently, iff the
    pseudoinverse Gram matrix is a Laplacian."""
    return not dihedral_angles(gp, tol).has_obtuse


def _check_subset(v: Sequence[int], n: int) -> list[int]:
    idx = list(v)
    if not idx:
        raise EmptySubsetError("vertex subset must be non-empty")
    if len(set(idx)) != len(idx):
        raise DuplicateIndexError(f"repeated index in {idx}")
    for i in idx:
        if not 0 <= i < n:
            raise IndexOutOfRangeError(f"index {i} out of range for n={n}")
    return idx


def face_distance(d, v: Sequence[int]) -> np.ndarray:
    """Squared-distance matrix of the face on the vertex subset ``v``:
    the corresponding submatrix, rows/columns in the order given."""
    m = linalg.as_square_array(d)
    idx = _check_subset(v, m.shape[0])
    return m[np.ix_(idx, idx)].copy()


def face_gram(gp: GramPair, v: Sequence[int], tol: Tolerances = DEFAULT) -> GramPair:
    """Canonical Gram pair of the face on ``v``: the centered submatrix
    of the Gram matrix, M_face = (I - uu^T/v) M_VV (I - uu^T/v)."""
    idx = _check_subset(v, gp.n)
    if len(idx) < 2:
        raise FaceTooSmallError("face Gram needs at least 2 vertices")
    k = len(idx)
    j = linalg.centering_projector(k)
    m = j @ gp.gram[np.ix_(idx, idx)] @ j
    m = 0.5 * (m + m.T)
    pinv = linalg.pinv_kernel_u(m, tol)
    return GramPair(gram=m, pinv_gram=pinv)


@dataclass(frozen=True)
class CircumsphereReport:
    center: np.ndarray
    radius: float
    max_deviation: float  # max_i | ||center - s_i|| - R |

    def passed(self, threshold: float = DEFAULT.residual) -> bool:
        return self.max_deviation <= threshold * self.radius


def circumsphere_check(emb: SimplexEmbedding, fb: FiedlerBlocks) -> CircumsphereReport:
    """All vertices must be equidistant (at radius R) from the circumcenter
    S r determined by the block identity."""
    center = emb.vertices @ fb.r
    dists = np.linalg.norm(emb.vertices - center[:, None], axis=0)
    return CircumsphereReport(
        center=center,
        radius=fb.radius,
        max_deviation=float(np.abs(dists - fb.radius).max()),
    )


def cayley_menger_volume(d) -> float:
    """Simplex volume from the bordered squared-distance determinant:

        vol^2 = (-1)^n det [[0, u^T], [u, D]] / ( ((n-1)!)^2 2^(n-1) ).
    """
    m = linalg.as_square_array(d)
    n = m.shape[0]
    bordered = np.zeros((n + 1, n + 1))
    bordered[0, 1:] = 1.0
    bordered[1:, 0] = 1.0
    bordered[1:, 1:] = m
    det = linalg.determinant(bordered)
    vol2 = (-1.0) ** n * det / (math.factorial(n - 1) ** 2 * 2.0 ** (n - 1))
    scale = max(float(np.abs(m).max()), np.finfo(float).tiny) ** (n - 1)
    if vol2 <= 1e-12 * scale:
        raise DegenerateDistanceMatrixError(
            f"squared volume {vol2:.3e} is not positive; "
            "input is degenerate or not realizable"
        )
    return math.sqrt(vol2)
