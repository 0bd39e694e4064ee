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

## @name Pipeline Defaults
## @see @ref progle.RunConfig.RunConfig
## @{

## Embedding dimension d.
kDefault_Dimension = 128
## Proximity order m, the highest transition power kept.
kDefault_Order = 2
## Edge dropout ratio used when drawing the masks of higher order terms.
kDefault_Dropout = 0.5
## Negative-noise ratio, the shift applied to the log proximity.
kDefault_NegativeRatio = 1.0
## Centre of the band-pass modulator on the Laplacian spectrum.
kDefault_Mu = 0.1
## Bandwidth/decay of the band-pass modulator.
kDefault_Theta = 0.5
## Number of Chebyshev terms used to expand the modulator.
kDefault_ChebyshevTerms = 10
kDefault_Seed = 42
## Relative residual tolerance of the truncated SVD.
kDefault_Tolerance = 1e-8
kDefault_Threads = 1

## @}

## @name Evaluation Defaults
## @{

kDefault_L2 = 1.0
kDefault_Trials = 10
kDefault_Ratios = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)

## @}

## @name Numeric Limits
## @{

## Orders above this are permitted, but warned about.
kMaxRecommendedOrder = 3
## Truncated SVD restarts allowed per requested singular triplet.
kSvdIterationsPerDimension = 50
## Power iterations used to estimate the largest Laplacian eigenvalue.
kLambdaMaxIterations = 30
## Relative inflation applied to the largest eigenvalue estimate.
kLambdaMaxMargin = 1.01
## Rows processed together when forming masked transition powers.
kProximityBlockRows = 2048
## Mask coordinates evaluated together by a sampled sparse product.
kSampledProductChunk = 65536
## Validated domain of the modified Bessel function evaluation.
kBesselMaxOrder = 64
kBesselMaxArgument = 100.0
## Mismatched labels listed in an alignment error.
kAlignmentErrorListLength = 10

## @}

## @name Exit Codes
## @{

kExitCode_Success = 0
kExitCode_Failure = 1
kExitCode_Parse = 2
kExitCode_Validation = 3
kExitCode_Convergence = 4
kExitCode_Invariant = 5

## @}

## @name Environment Variables
## @{

kEnvVar_Threads = "PROGLE_THREADS"
kEnvVar_LoggingSeverity = "PROGLE_LOGGING_SEVERITY"
kEnvVar_Debug = "PROGLE_DEBUG"
kEnvVar_Audit = "PROGLE_AUDIT"

## @}
