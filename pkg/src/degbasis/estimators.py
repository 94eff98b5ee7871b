"""scikit-learn style wrappers around the functional core.

BasisDecomposer is a transformer: fit computes the generating set for the
configured family and cap, transform maps regularity sequences to their
multiplicity vectors (integer features, one column per nonzero basis
element), and inverse_transform rebuilds the sequences. Componentwise
dominance between two feature rows certifies the realization order between
the underlying degree sequences, so the feature space is order-faithful.

RealizabilityClassifier predicts family membership per row. Both follow
the usual conventions: parameters are set in __init__ and untouched by
fit, fitted attributes carry trailing underscores, and get_params/
set_params/clone work as expected.
"""

from __future__ import annotations

from typing import Any, Iterable, Optional

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .decomposition import max_component_bound
from .families import get_family
from .semigroup import DEFAULT_BOUND, generating_set
from .validation import coerce_sequences
from .wqo import multiplicity_vector

__all__ = ["BasisDecomposer", "RealizabilityClassifier"]


class BasisDecomposer(BaseEstimator, TransformerMixin):
    """Decompose regularity sequences over a fitted generating set.

    Parameters
    ----------
    family : str, default "graph"
        Built-in family name, "graph" or "bipartite".
    k : int or None, default None
        Degree cap. None infers the smallest cap covering the fit data.
    bound : int, default 30
        Search bound for minimal class members.
    """

    def __init__(self, family: str = "graph", k: Optional[int] = None, bound: int = DEFAULT_BOUND):
        self.family = family
        self.k = k
        self.bound = bound

    def fit(self, X: Optional[Iterable[Any]] = None, y: Any = None) -> "BasisDecomposer":
        if self.k is not None:
            k = int(self.k)
        else:
            if X is None:
                raise ValueError("k=None needs fit data to infer the cap from")
            rows = coerce_sequences(X)
            k = max((r.k for r in rows), default=0)
        fam = get_family(self.family)
        self.k_ = k
        self.basis_ = generating_set(fam, k, self.bound)
        self.elements_ = self.basis_.nonzero_elements()
        self.modulus_ = self.basis_.modulus.t
        self.max_component_bound_ = max_component_bound(self.basis_)
        self.n_features_out_ = len(self.elements_)
        return self

    def _check_fitted(self):
        if not hasattr(self, "basis_"):
            raise NotFittedError("BasisDecomposer is not fitted yet; call fit first")

    def transform(self, X: Iterable[Any]) -> np.ndarray:
        """Multiplicity vectors, one row per input sequence."""
        self._check_fitted()
        rows = coerce_sequences(X, self.k_)
        out = np.zeros((len(rows), len(self.elements_)), dtype=np.int64)
        for idx, R in enumerate(rows):
            out[idx] = multiplicity_vector(R, self.basis_).counts
        return out

    def inverse_transform(self, X: np.ndarray) -> np.ndarray:
        """Regularity counts rebuilt from multiplicity rows."""
        self._check_fitted()
        X = np.asarray(X, dtype=np.int64)
        element_matrix = np.array([e.counts for e in self.elements_], dtype=np.int64)
        return X @ element_matrix

    def get_feature_names_out(self, input_features: Any = None) -> np.ndarray:
        self._check_fitted()
        return np.array(
            ["x".join(str(c) for c in e.counts) for e in self.elements_], dtype=object
        )


class RealizabilityClassifier(BaseEstimator):
    """Predict family membership of regularity sequences.

    Stateless apart from parameter validation; fit exists so the class
    composes with pipelines and clone.
    """

    def __init__(self, family: str = "graph", k: Optional[int] = None):
        self.family = family
        self.k = k

    def fit(self, X: Optional[Iterable[Any]] = None, y: Any = None) -> "RealizabilityClassifier":
        get_family(self.family)  # validate the name early
        if self.k is not None:
            self.k_ = int(self.k)
        elif X is not None:
            rows = coerce_sequences(X)
            self.k_ = max((r.k for r in rows), default=0)
        else:
            self.k_ = None
        self.is_fitted_ = True
        return self

    def predict(self, X: Iterable[Any]) -> np.ndarray:
        if not getattr(self, "is_fitted_", False):
            raise NotFittedError("RealizabilityClassifier is not fitted yet")
        fam = get_family(self.family)
        rows = coerce_sequences(X, self.k_)
        return np.array([fam.membership(R) for R in rows], dtype=bool)
