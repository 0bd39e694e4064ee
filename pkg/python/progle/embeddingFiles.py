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
# @namespace progle.embeddingFiles
# Embedding file formats.
#
# The text format follows the word2vec convention: a "n d" header line,
# then one "label v1 ... vd" line per node. Values are written with
# the shortest repr that round-trips a float64.
#
# The binary format is the raw little-endian float64 matrix in row
# order, with a JSON sidecar (the matrix path plus ".json") holding
# its shape, row labels, provenance and the run configuration.

import json
import math
import os

import numpy as np

from .Embedding import Embedding
from .exceptions import ParseError, ValidationError


__all__ = ['writeText', 'readText', 'writeBinary', 'readBinary', 'readEmbedding',
           'sidecarPath', 'kBinaryDtype']

kBinaryDtype = "<f8"


def _rowLabels(embedding):
    labels = embedding.labels()
    if labels is None:
        return [str(i) for i in range(embedding.nodeCount())]
    return list(labels)


def writeText(embedding, path):
    """
    Writes an embedding in the word2vec text format. Unlabelled rows
    are labelled by their index.
    """
    vectors = embedding.vectors()
    with open(path, "w", encoding="utf-8") as f:
        f.write("%d %d\n" % vectors.shape)
        for label, row in zip(_rowLabels(embedding), vectors.tolist()):
            f.write(label)
            f.write(" ")
            f.write(" ".join(map(repr, row)))
            f.write("\n")


def readText(path, logger=None):
    """
    Reads an embedding in the word2vec text format.

    @return progle.Embedding, With external provenance.

    @exception progle.exceptions.ParseError If the header is missing, a
    row has the wrong number of values, a label repeats, or the row
    count disagrees with the header.
    """
    labels = []
    rows = []
    seen = set()
    header = None
    with open(path, "r", encoding="utf-8") as f:
        for lineNumber, line in enumerate(f, start=1):
            tokens = line.split()
            if not tokens:
                continue
            if header is None:
                if len(tokens) != 2:
                    raise ParseError("Expected an 'n d' header", path, lineNumber)
                try:
                    header = (int(tokens[0]), int(tokens[1]))
                except ValueError:
                    raise ParseError("Malformed 'n d' header", path, lineNumber)
                continue
            if len(tokens) != header[1] + 1:
                raise ParseError("Expected a label and %d values, got %d field(s)" % (
                    header[1], len(tokens)), path, lineNumber)
            if tokens[0] in seen:
                raise ParseError("Label '%s' appears twice" % tokens[0], path, lineNumber)
            try:
                values = [float(t) for t in tokens[1:]]
            except ValueError:
                raise ParseError("Malformed value", path, lineNumber)
            if not all(math.isfinite(v) for v in values):
                raise ValidationError("Non-finite value (%s:%d)" % (path, lineNumber))
            seen.add(tokens[0])
            labels.append(tokens[0])
            rows.append(values)

    if header is None:
        raise ParseError("Empty embedding file", path)
    if len(rows) != header[0]:
        raise ParseError("Header declares %d rows, found %d" % (header[0], len(rows)), path)

    vectors = np.array(rows, dtype=np.float64).reshape(header[0], header[1])
    return Embedding(vectors, Embedding.kProvenance_External, labels, logger=logger)


def sidecarPath(path):
    return "%s.json" % path


def writeBinary(embedding, path, config=None):
    """
    Writes an embedding in the binary format.

    @param config progle.RunConfig [None] Echoed into the sidecar.
    """
    vectors = embedding.vectors()
    vectors.astype(kBinaryDtype).tofile(path)
    sidecar = {
        "shape": list(vectors.shape),
        "dtype": kBinaryDtype,
        "labels": _rowLabels(embedding),
        "provenance": embedding.provenance(),
        "config": dict(config.items()) if config is not None else None,
    }
    with open(sidecarPath(path), "w", encoding="utf-8") as f:
        json.dump(sidecar, f, indent=2, sort_keys=True)
        f.write("\n")


def readBinary(path, logger=None):
    """
    Reads an embedding in the binary format.

    @return progle.Embedding, With external provenance.

    @exception progle.exceptions.ParseError If the sidecar is missing
    or malformed, or disagrees with the matrix file.
    """
    try:
        with open(sidecarPath(path), "r", encoding="utf-8") as f:
            sidecar = json.load(f)
        rows, cols = (int(s) for s in sidecar["shape"])
        labels = sidecar.get("labels")
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ParseError("Unreadable sidecar: %s" % exc, sidecarPath(path)) from exc

    vectors = np.fromfile(path, dtype=kBinaryDtype)
    if vectors.size != rows * cols:
        raise ParseError("Sidecar declares %dx%d values, the matrix holds %d" % (
            rows, cols, vectors.size), path)
    return Embedding(vectors.reshape(rows, cols), Embedding.kProvenance_External, labels,
                     logger=logger)


def readEmbedding(path, logger=None):
    """
    Reads an embedding in whichever format it was written: binary when
    a sidecar exists, text otherwise.
    """
    if os.path.exists(sidecarPath(path)):
        return readBinary(path, logger=logger)
    return readText(path, logger=logger)
