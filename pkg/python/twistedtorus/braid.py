#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
An independent route to the Alexander polynomial: the braid word of a twisted
torus knot, its reduced Burau matrix, and the determinant relation

    det(B - I) (1 - t) / (1 - t^n)  =  Delta(t)   (up to units).
"""

__all__ = ["BraidWord", "LaurentMatrix", "ttk_braid_word", "closure_is_knot",
    "reduced_burau", "alexander_from_braid", "NotAKnotClosure"]

import logging
import re

import numpy as np

from . import laurent
from .core import AlexanderResult, TTKParams, UnsupportedParameters, canonicalize
from .laurent import ONE, T, ZERO, monomial

logger = logging.getLogger(__name__)

T_INVERSE = monomial(-1)


class NotAKnotClosure(ValueError):
    """ Raised when the closure of a braid has more than one component. """


class BraidWord(object):
    """
    A braid word on `strands` strands. Letter `i > 0` is the generator
    sigma_i and letter `-i` its inverse, for 1 <= i < strands.

    :param strands:
        The number of strands.

    :param letters: [optional]
        The signed generator indices.
    """

    def __init__(self, strands, letters=None):
        strands = int(strands)
        if strands < 1:
            raise ValueError("a braid needs at least one strand")

        letters = tuple(int(letter) for letter in (letters or ()))
        for letter in letters:
            if letter == 0 or abs(letter) >= strands:
                raise ValueError("letter {} is not a generator of the braid "
                                 "group on {} strands".format(letter, strands))
        self._strands = strands
        self._letters = letters
        return None


    @classmethod
    def parse(cls, text):
        """
        Parse the text form "n=4: 1,2,3,-1".

        :param text:
            A strand count header followed by comma-separated signed integers.
        """
        match = re.match(r"^\s*n\s*=\s*(\d+)\s*:(.*)$", text)
        if match is None:
            raise ValueError("expected 'n=<strands>: <letters>'; got '{}'"\
                .format(text))
        strands, body = match.groups()
        letters = [int(item) for item in body.split(",") if item.strip()]
        return cls(int(strands), letters)


    def __str__(self):
        return "n={0}: {1}".format(self.strands,
            ",".join(str(letter) for letter in self.letters))


    def __repr__(self):
        return "<{0}.{1} on {2} strands with {3} letters>".format(
            self.__module__, type(self).__name__, self.strands,
            len(self.letters))


    def __eq__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        return (self.strands, self.letters) == (other.strands, other.letters)


    def __hash__(self):
        return hash((self.strands, self.letters))


    def __len__(self):
        return len(self._letters)


    def __add__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise ValueError("cannot concatenate braids on {} and {} strands"\
                .format(self.strands, other.strands))
        return BraidWord(self.strands, self.letters + other.letters)


    @property
    def strands(self):
        """ Return the number of strands. """
        return self._strands


    @property
    def letters(self):
        """ Return the signed generator indices. """
        return self._letters


    def is_positive(self):
        """ Return whether every letter is a positive generator. """
        return all(letter > 0 for letter in self.letters)


    def inverse(self):
        """ Return the inverse braid word. """
        return BraidWord(self.strands, [-letter for letter in self.letters[::-1]])


    def conjugate(self, letter):
        """
        Return the word `g^-1 w g` for the single-letter braid `g`.

        :param letter:
            A signed generator index.
        """
        return BraidWord(self.strands, (-letter, ) + self.letters + (letter, ))


    def permutation(self):
        """
        Return the permutation of strand positions induced by the braid, as an
        array where entry `i` is the final position of the strand starting at
        position `i`.
        """
        positions = np.arange(self.strands)
        for letter in self.letters:
            i = abs(letter) - 1
            positions[[i, i + 1]] = positions[[i + 1, i]]
        # positions[j] is the strand now at position j; invert it.
        permutation = np.empty_like(positions)
        permutation[positions] = np.arange(self.strands)
        return permutation


class LaurentMatrix(object):
    """
    A square matrix with Laurent polynomial entries.

    :param entries:
        A square nested sequence (or object array) of `LaurentPolynomial` or
        integer entries.
    """

    def __init__(self, entries):
        rows = [list(row) for row in entries]
        size = len(rows)
        if size < 1 or any(len(row) != size for row in rows):
            raise ValueError("a Laurent matrix must be square and non-empty")

        self._entries = np.empty((size, size), dtype=object)
        for i, row in enumerate(rows):
            for j, entry in enumerate(row):
                self._entries[i, j] = entry if isinstance(
                    entry, laurent.LaurentPolynomial) else monomial(0, entry)
        return None


    @classmethod
    def identity(cls, size):
        """
        Return the identity matrix.

        :param size:
            The dimension of the matrix.
        """
        return cls([[ONE if i == j else ZERO for j in range(size)]
                    for i in range(size)])


    @classmethod
    def _wrap(cls, array):
        matrix = cls.__new__(cls)
        matrix._entries = array
        return matrix


    def __repr__(self):
        return "<{0}.{1} of dimension {2}>".format(self.__module__,
            type(self).__name__, self.size)


    def __str__(self):
        return "\n".join("[" + ", ".join(str(entry) for entry in row) + "]"
                         for row in self._entries)


    @property
    def size(self):
        """ Return the dimension of the matrix. """
        return self._entries.shape[0]


    def __getitem__(self, index):
        return self._entries[index]


    def rows(self):
        """ Return the entries as a list of lists. """
        return [list(row) for row in self._entries]


    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.size == other.size and all(
            a == b for a, b in zip(self._entries.flat, other._entries.flat))


    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal


    def __matmul__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        if other.size != self.size:
            raise ValueError("dimension mismatch ({} != {})".format(
                self.size, other.size))
        return LaurentMatrix._wrap(np.dot(self._entries, other._entries))


    def minus_identity(self):
        """ Return this matrix minus the identity. """
        entries = self._entries.copy()
        for i in range(self.size):
            entries[i, i] = entries[i, i] - ONE
        return LaurentMatrix._wrap(entries)


    def apply_generator(self, letter):
        """
        Return this matrix multiplied on the right by the reduced Burau matrix
        of a single generator.

        :param letter:
            A signed generator index, with `|letter| <= size`.
        """

        k = abs(letter) - 1
        size = self.size
        if not 0 <= k < size:
            raise ValueError("generator {} acts on a matrix of dimension {}"\
                .format(letter, size))

        # The generator differs from the identity only in row k:
        #   sigma_i     -> (t, -t, 1)        at columns (k-1, k, k+1)
        #   sigma_i^-1  -> (1, -1/t, 1/t)
        if letter > 0:
            left, middle, right = (T, -T, ONE)
        else:
            left, middle, right = (ONE, -T_INVERSE, T_INVERSE)

        entries = self._entries.copy()
        column = self._entries[:, k]
        if k > 0:
            entries[:, k - 1] = self._entries[:, k - 1] + column * left
        if k + 1 < size:
            entries[:, k + 1] = self._entries[:, k + 1] + column * right
        entries[:, k] = column * middle
        return LaurentMatrix._wrap(entries)


    def determinant(self):
        """
        Return the determinant by fraction-free (Bareiss) elimination.

        Each row is first shifted by a power of t so that all its entries are
        ordinary polynomials; every division in the elimination is then exact.
        """

        rows = self.rows()
        size = len(rows)

        shift = 0
        for row in rows:
            nonzero = [entry for entry in row if not entry.is_zero]
            if not nonzero:
                return ZERO
            low = min(entry.min_degree for entry in nonzero)
            shift += low
            row[:] = [entry.shift(-low) for entry in row]

        sign, previous = 1, ONE
        for k in range(size - 1):
            if rows[k][k].is_zero:
                for i in range(k + 1, size):
                    if not rows[i][k].is_zero:
                        rows[k], rows[i] = rows[i], rows[k]
                        sign = -sign
                        break
                else:
                    return ZERO

            pivot = rows[k][k]
            for i in range(k + 1, size):
                for j in range(k + 1, size):
                    rows[i][j] = laurent.exact_divide(
                        pivot * rows[i][j] - rows[i][k] * rows[k][j], previous)
            previous = pivot

        determinant = rows[-1][-1].shift(shift)
        return determinant if sign > 0 else -determinant


def ttk_braid_word(params):
    """
    Return the braid word of T(p,q;r,s) on p strands: the torus block
    (sigma_1 ... sigma_{p-1})^q followed by (sigma_1 ... sigma_{r-1})^{rs}.
    For s < 0 the twist block is written with inverse letters,
    (sigma_{r-1}^-1 ... sigma_1^-1)^{r|s|}.

    :param params:
        Canonical `TTKParams` (or a raw tuple) with 1 <= r <= p.
    """

    if not isinstance(params, TTKParams):
        params = canonicalize(params)

    p, q, r, s = params.key
    if not 1 <= r <= p:
        raise UnsupportedParameters(
            "r = {} is outside the supported range 1 <= r <= p = {}".format(r, p))

    letters = list(range(1, p)) * q
    if s > 0:
        letters.extend(list(range(1, r)) * (r * s))
    elif s < 0:
        letters.extend(list(range(-(r - 1), 0)) * (r * -s))
    return BraidWord(p, letters)


def closure_is_knot(braid):
    """
    Return whether the closure of a braid is a knot, i.e. whether its strand
    permutation is a single cycle.

    :param braid:
        A `BraidWord`.
    """

    permutation = braid.permutation()
    position, length = (0, 0)
    while True:
        position = permutation[position]
        length += 1
        if position == 0:
            break
    return length == braid.strands


def reduced_burau(braid):
    """
    Return the reduced Burau matrix of a braid, the ordered product of the
    (n-1)x(n-1) generator matrices.

    :param braid:
        A `BraidWord` on at least two strands.
    """

    if braid.strands < 2:
        raise ValueError("the reduced Burau representation needs at least "
                         "two strands")

    matrix = LaurentMatrix.identity(braid.strands - 1)
    for letter in braid.letters:
        matrix = matrix.apply_generator(letter)
    return matrix


def alexander_from_braid(braid, params=None):
    """
    Compute the Alexander polynomial of a braid closure from its reduced Burau
    matrix B, as det(B - I) (1 - t) / (1 - t^n).

    :param braid:
        A `BraidWord` whose closure is a knot.

    :param params: [optional]
        The `TTKParams` to attach to the result.

    :returns:
        An `AlexanderResult`.
    """

    if not closure_is_knot(braid):
        raise NotAKnotClosure("the closure of {} has more than one component"\
            .format(braid))

    n = braid.strands
    if n == 1:
        return AlexanderResult.from_polynomial(params, ONE)

    determinant = reduced_burau(braid).minus_identity().determinant()
    numerator = (ONE - T) * determinant
    poly = laurent.exact_divide(numerator, ONE - monomial(n))

    value = laurent.evaluate_at(poly, 1)
    if value not in (1, -1):
        raise laurent.NotAKnotPolynomial(
            "Burau determinant gives value {} at t = 1 for {!r}".format(
                value, braid))
    return AlexanderResult.from_polynomial(params, poly)
