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

##
# @namespace progle
# Sparse spectral network embedding. A graph is factorized into a raw
# embedding from a sparse, dropout-masked proximity matrix, which is
# then propagated through a band-pass modulated graph Laplacian.
#
# @see progle.pipeline.Pipeline for the end to end run, and
# progle.cli for the command line surface.
#
from .Embedding import Embedding
from .RunConfig import RunConfig

__version__ = "0.1.0"
