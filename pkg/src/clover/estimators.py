"""scikit-learn style front ends.

``GradedSpace`` fits the Smith normal form of one degree and transforms formal
sums into coordinates; ``BracketExpansion`` fits the class representatives for
``n`` components and transforms LP-surgery data into linking coefficients.
"""
import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .contraction import ell
from .enumerator import representatives_up_to
from .graded import FormalSum, space_structure
from .validation import check_formal_sums, check_surgeries


class GradedSpace(TransformerMixin, BaseEstimator):
    def __init__(self, degree=1, max_degree=None):
        self.degree = degree
        self.max_degree = max_degree

    def fit(self, X=None, y=None):
        structure = space_structure(self.degree, self.max_degree)
        self.structure_ = structure
        self.rank_ = structure.rank
        self.torsion_ = list(structure.torsion)
        self.basis_ = list(structure.basis)
        self.classes_ = structure.classes
        self.moduli_ = structure.coordinate_moduli
        return self

    def transform(self, X):
        check_is_fitted(self, "structure_")
        sums = check_formal_sums(X, self.degree)
        out = np.zeros((len(sums), len(self.moduli_)), dtype=object)
        for i, s in enumerate(sums):
            out[i, :] = self.structure_.reduce(s)
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "structure_")
        return np.array(
            [f"free{i}" if m == 0 else f"z{m}_{i}" for i, m in enumerate(self.moduli_)], dtype=object
        )


class BracketExpansion(TransformerMixin, BaseEstimator):
    def __init__(self, n=2, max_degree=None):
        self.n = n
        self.max_degree = max_degree

    def fit(self, X=None, y=None):
        catalogs = representatives_up_to(self.n, self.max_degree)
        self.classes_ = tuple(G for catalog in catalogs for G in catalog)
        return self

    def transform(self, X):
        """Matrix of :class:`Coefficient` values, one column per class in ``classes_``."""
        check_is_fitted(self, "classes_")
        surgeries = check_surgeries(X, self.n)
        out = np.empty((len(surgeries), len(self.classes_)), dtype=object)
        for i, D in enumerate(surgeries):
            for j, G in enumerate(self.classes_):
                out[i, j] = ell(D, G)
        return out

    def expand(self, X):
        """Same as :meth:`transform` but as one :class:`FormalSum` per surgery."""
        rows = self.transform(X)
        return [FormalSum(dict(zip(self.classes_, row))) for row in rows]
