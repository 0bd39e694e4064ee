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

import os

from . import constants
from ._core.objects import FixedInterfaceObject, TypedProperty, inRange
from .exceptions import ValidationError


__all__ = ['RunConfig', 'resolveThreads']


class RunConfig(FixedInterfaceObject):
    """
    The RunConfig holds every tunable of an embedding run. Values are
    conformed and range checked as they are set, so an invalid value
    raises a @ref progle.exceptions.ValidationError at the point it is
    supplied.

    @code
    config = RunConfig(dim=64, order=3)
    for name, value in config.items():
        print(name, value)
    @endcode
    """

    dim = TypedProperty(
        int, constants.kDefault_Dimension, order=0, validator=inRange(1),
        doc="Dimension of the node vectors.")
    order = TypedProperty(
        int, constants.kDefault_Order, order=1, validator=inRange(1),
        doc="Highest transition power kept in the proximity matrix.")
    dropout = TypedProperty(
        float, constants.kDefault_Dropout, order=2, validator=inRange(0.0, 1.0, highInclusive=False),
        doc="Probability of dropping an edge from each higher order mask.")
    negativeRatio = TypedProperty(
        float, constants.kDefault_NegativeRatio, order=3,
        validator=inRange(0.0, lowInclusive=False),
        doc="Negative-noise ratio shifting the log proximity.")
    mu = TypedProperty(
        float, constants.kDefault_Mu, order=4, validator=inRange(0.0, 2.0),
        doc="Centre of the band-pass modulator.")
    theta = TypedProperty(
        float, constants.kDefault_Theta, order=5,
        validator=inRange(0.0, constants.kBesselMaxArgument),
        doc="Bandwidth of the band-pass modulator.")
    chebK = TypedProperty(
        int, constants.kDefault_ChebyshevTerms, order=6,
        validator=inRange(1, constants.kBesselMaxOrder + 1),
        doc="Number of Chebyshev terms.")
    seed = TypedProperty(
        int, constants.kDefault_Seed, order=7, validator=inRange(0),
        doc="Seed of every random draw in the run.")
    clampNegative = TypedProperty(
        bool, False, order=8, doc="Drop negative entries of the shifted log matrix.")
    noRescale = TypedProperty(
        bool, False, order=9,
        doc="Use the modulator literally, even if its spectrum leaves [-1, 1].")
    threads = TypedProperty(
        int, constants.kDefault_Threads, order=10, validator=inRange(1),
        doc="Upper bound on worker and BLAS threads.")
    tolerance = TypedProperty(
        float, constants.kDefault_Tolerance, order=11,
        validator=inRange(0.0, 1.0, lowInclusive=False),
        doc="Relative residual tolerance of the truncated SVD.")

    def __init__(self, **kwargs):
        super(RunConfig, self).__init__(**kwargs)

    def validate(self):
        """
        Re-checks every field. Fields are checked as they are set, so
        this only fails if a field has been cleared to None.

        @exception progle.exceptions.ValidationError
        """
        for name, value in self.items():
            if value is None:
                raise ValidationError("%s must be set" % name)

    def __repr__(self):
        return "RunConfig(%s)" % ", ".join("%s=%r" % item for item in self.items())


def resolveThreads(flagValue=None):
    """
    Resolves the thread count of a run from, in order of precedence,
    the command line flag, then the environment, then the default.

    @envvar **PROGLE_THREADS** *int* Used when no flag is given.

    @exception progle.exceptions.ValidationError If the resolved value
    is not a positive integer.
    """
    value = flagValue
    source = "--threads"
    if value is None and os.environ.get(constants.kEnvVar_Threads):
        value = os.environ[constants.kEnvVar_Threads]
        source = constants.kEnvVar_Threads
    if value is None:
        return constants.kDefault_Threads
    try:
        threads = int(value)
    except ValueError as exc:
        raise ValidationError("%s must be an integer, not %r" % (source, value)) from exc
    if threads < 1:
        raise ValidationError("%s must be >= 1, not %d" % (source, threads))
    return threads
