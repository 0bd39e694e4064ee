#
#   Copyright 2021 The Progle Authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#

import numbers

import numpy as np
from scipy.special import iv

from .. import constants
from ..exceptions import ValidationError


__all__ = ['FilterSpec', 'besselI', 'chebyshevCoefficients']


def besselI(order, theta):
    """
    The modified Bessel function of the first kind, I_order(theta).

    @param order int, In 0..kBesselMaxOrder.

    @param theta float, In [0, kBesselMaxArgument].

    @exception progle.exceptions.ValidationError Outside of the domain
    above.
    """
    if not isinstance(order, numbers.Integral) or not 0 <= order <= constants.kBesselMaxOrder:
        raise ValidationError("Bessel order must be an integer in 0..%d, got %r" % (
            constants.kBesselMaxOrder, order))
    if not 0.0 <= theta <= constants.kBesselMaxArgument:
        raise ValidationError("Bessel argument must lie in [0, %g], got %r" % (
            constants.kBesselMaxArgument, theta))
    return float(iv(int(order), float(theta)))


def chebyshevCoefficients(theta, termCount):
    """
    The Chebyshev coefficients of exp(-x theta) on [-1, 1]:

      [I_0(theta), -2 I_1(theta), 2 I_2(theta), -2 I_3(theta), ...]

    @param termCount int, The number of coefficients k >= 1.

    @return numpy.ndarray
    """
    if termCount < 1:
        raise ValidationError("At least one Chebyshev term is needed, got %d" % termCount)
    coefficients = np.array([besselI(i, theta) for i in range(termCount)])
    coefficients[1:] *= 2.0 * (-1.0) ** np.arange(1, termCount)
    return coefficients


class FilterSpec(object):
    """
    The band-pass modulator applied to the Laplacian spectrum,

      g(lambda) = exp(-1/2 [(lambda - mu)^2 - 1] theta)

    which peaks at mu and decays with the distance from it. A mu near 0
    emphasises the low end of the spectrum (global clustering), and a
    mu near 2 its high end (local smoothing). The filter is applied as
    a truncated Chebyshev series of termCount terms.
    """

    def __init__(self, mu=constants.kDefault_Mu, theta=constants.kDefault_Theta,
                 termCount=constants.kDefault_ChebyshevTerms):
        """
        @param mu float, The band centre, in [0, 2].

        @param theta float, The bandwidth, >= 0. Zero makes the
        modulator the identity.

        @param termCount int, The Chebyshev term count k >= 1.
        """
        super(FilterSpec, self).__init__()
        if not 0.0 <= mu <= 2.0:
            raise ValidationError("mu must lie in [0, 2], got %r" % (mu,))
        if not 0.0 <= theta <= constants.kBesselMaxArgument:
            raise ValidationError("theta must lie in [0, %g], got %r" % (
                constants.kBesselMaxArgument, theta))
        if not isinstance(termCount, numbers.Integral) or termCount < 1:
            raise ValidationError("The Chebyshev term count must be >= 1, got %r" % (termCount,))
        if termCount - 1 > constants.kBesselMaxOrder:
            raise ValidationError("At most %d Chebyshev terms are supported" % (
                constants.kBesselMaxOrder + 1))

        self.__mu = float(mu)
        self.__theta = float(theta)
        self.__termCount = int(termCount)
        self.__coefficients = chebyshevCoefficients(self.__theta, self.__termCount)
        self.__coefficients.setflags(write=False)

    def mu(self):
        return self.__mu

    def theta(self):
        return self.__theta

    def termCount(self):
        return self.__termCount

    def coefficients(self, scale=1.0):
        """
        @param scale float [1.0] The factor the operator spectrum has
        been multiplied by. Coefficients are then those of the exponent
        theta / scale, so the series still evaluates g.

        @return numpy.ndarray, c_0..c_{k-1}.
        """
        if scale == 1.0:
            return self.__coefficients
        if not scale > 0:
            raise ValidationError("The spectrum scale must be > 0, got %r" % (scale,))
        return chebyshevCoefficients(self.__theta / scale, self.__termCount)

    def response(self, eigenvalues):
        """
        Evaluates g exactly, eg. on Laplacian eigenvalues.

        @return numpy.ndarray or float
        """
        lam = np.asarray(eigenvalues, dtype=np.float64)
        return np.exp(-0.5 * ((lam - self.__mu) ** 2 - 1.0) * self.__theta)

    def __repr__(self):
        return "FilterSpec(mu=%r, theta=%r, termCount=%d)" % (
            self.__mu, self.__theta, self.__termCount)
