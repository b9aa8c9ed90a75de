"""
First-order unification over root terms and tree descriptions.

Substitutions are persistent and kept idempotent: extending one returns a
new substitution and every stored value is already fully resolved.
Failure is a normal return (None, or an exhausted iterator).
"""
from collections.abc import Mapping
from typing import Iterator, Optional

from logic_blocks.core_types import (
    RootTerm,
    Var,
    iter_variables,
    map_variables,
)


class Substitution(Mapping):
    """Finite map from variables to feature values or tree terms."""

    __slots__ = ("_bindings",)

    def __init__(self, bindings=None):
        self._bindings = dict(bindings or {})

    def __getitem__(self, var):
        return self._bindings[var]

    def __iter__(self):
        return iter(self._bindings)

    def __len__(self):
        return len(self._bindings)

    def __repr__(self):
        body = ", ".join(f"{var} -> {value}" for var, value in self._bindings.items())
        return f"Substitution({{{body}}})"

    def walk(self, term):
        if isinstance(term, Var):
            return self._bindings.get(term, term)
        return term

    def extend(self, var, value):
        value = apply(value, self)
        single = {var: value}
        bindings = {bound: map_variables(old, lambda v: single.get(v, v))
                    for bound, old in self._bindings.items()}
        bindings[var] = value
        return Substitution(bindings)


EMPTY = Substitution()


def apply(term, subst):
    """Resolve every bound variable in term."""
    if not subst:
        return term
    return map_variables(term, subst.walk)


def occurs_in(var, term, subst=EMPTY):
    return any(found == var for found in iter_variables(apply(term, subst)))


def _bind(var, value, subst):
    if var == value:
        return subst
    if occurs_in(var, value, subst):
        return None
    return subst.extend(var, value)


def unify_value(a, b, subst) -> Optional[Substitution]:
    """Unify two flat feature values (atoms or variables)."""
    a, b = subst.walk(a), subst.walk(b)
    if a == b:
        return subst
    if isinstance(a, Var):
        return _bind(a, b, subst)
    if isinstance(b, Var):
        return _bind(b, a, subst)
    return None


def unify_root(a: RootTerm, b: RootTerm, subst) -> Optional[Substitution]:
    """
    Unify two root terms.

    Symbols must be equal; attributes present on only one side are not a
    clash.
    """
    if a.symbol != b.symbol:
        return None
    other = b.feature_map()
    for name, value in a.features:
        if name in other:
            subst = unify_value(value, other[name], subst)
            if subst is None:
                return None
    return subst


def unify_stree_all(a, b, subst) -> Iterator[Substitution]:
    """Every unifier of two tree terms, one per distinct slash pairing."""
    a, b = subst.walk(a), subst.walk(b)
    if isinstance(a, Var) or isinstance(b, Var):
        result = _bind(a, b, subst) if isinstance(a, Var) else _bind(b, a, subst)
        if result is not None:
            yield result
        return
    subst = unify_root(a.root, b.root, subst)
    if subst is None or len(a.leaves) != len(b.leaves):
        return
    if any(left.dir != right.dir for left, right in zip(a.leaves, b.leaves)):
        return
    pairs = [(left.cat, right.cat) for left, right in zip(a.leaves, b.leaves)]
    for partial in _unify_pairs(pairs, subst):
        yield from _unify_multiset(list(a.slash), list(b.slash), partial)


def unify_stree(a, b, subst) -> Optional[Substitution]:
    return next(unify_stree_all(a, b, subst), None)


def _unify_pairs(pairs, subst):
    if not pairs:
        yield subst
        return
    (left, right), rest = pairs[0], pairs[1:]
    for partial in unify_stree_all(left, right, subst):
        yield from _unify_pairs(rest, partial)


def _unify_multiset(xs, ys, subst):
    if len(xs) != len(ys):
        return
    if not xs:
        yield subst
        return
    produced = []
    tried = []
    first, rest = xs[0], xs[1:]
    for index, candidate in enumerate(ys):
        resolved = apply(candidate, subst)
        if resolved in tried:
            continue
        tried.append(resolved)
        for partial in unify_stree_all(first, candidate, subst):
            for result in _unify_multiset(rest, ys[:index] + ys[index + 1:], partial):
                if result not in produced:
                    produced.append(result)
                    yield result


def rename_apart(term):
    """A copy of term whose variables are all fresh, renamed consistently."""
    renaming = {}

    def fresh(var):
        if var not in renaming:
            renaming[var] = Var(var.name)
        return renaming[var]

    return map_variables(term, fresh)
