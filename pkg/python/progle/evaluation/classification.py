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
# @namespace progle.evaluation.classification
# Multi-label node classification on embedding features: random train
# ratio splits, one-vs-rest L2-regularized logistic regression, ranked
# assignment of the known number of labels per node, and micro/macro
# F1 scoring over repeated trials.

from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.optimize import minimize
from scipy.special import expit
from sklearn.metrics import f1_score
from sklearn.preprocessing import MultiLabelBinarizer, normalize

from .. import constants
from ..exceptions import ValidationError
from ..factorization.proximity import generator
from ..logging import LoggerInterface, defaultLogger
from .EvalReport import EvalReport


__all__ = ['OvrLogisticClassifier', 'split', 'logisticLossAndGradient', 'trainOvrLogreg',
           'predictTopK', 'microMacroF1', 'evaluateEmbedding']

## Gradient norm the per-label fits are driven to.
kGradientTolerance = 1e-7
kMaxNewtonIterations = 500


class OvrLogisticClassifier(object):
    """
    One linear scorer per label: score = x . w_label + b_label.
    """

    def __init__(self, weights, biases):
        super(OvrLogisticClassifier, self).__init__()
        self.__weights = np.asarray(weights, dtype=np.float64)
        self.__biases = np.asarray(biases, dtype=np.float64)

    def weights(self):
        """
        @return numpy.ndarray, labels x d.
        """
        return self.__weights

    def biases(self):
        return self.__biases

    def labelCount(self):
        return self.__biases.shape[0]

    def scores(self, features):
        """
        @return numpy.ndarray, nodes x labels decision values.
        """
        return np.asarray(features, dtype=np.float64) @ self.__weights.T + self.__biases


def split(labels, ratio, seed):
    """
    Randomly splits the labelled nodes into train and test sets, with
    round(ratio * n) nodes for training.

    @param labels LabelSet

    @param ratio float, In (0, 1).

    @param seed int or numpy.random.SeedSequence

    @return tuple(numpy.ndarray, numpy.ndarray) The ascending train and
    test node ids.

    @exception progle.exceptions.ValidationError If either side would
    be empty.
    """
    if not 0.0 < ratio < 1.0:
        raise ValidationError("Train ratio must lie in (0, 1), got %r" % (ratio,))
    nodes = labels.labelledNodes()
    trainCount = int(round(ratio * len(nodes)))
    if trainCount < 1 or trainCount > len(nodes) - 1:
        raise ValidationError("Ratio %g of %d labelled nodes leaves an empty split" % (
            ratio, len(nodes)))
    shuffled = generator(seed).permutation(nodes)
    return np.sort(shuffled[:trainCount]), np.sort(shuffled[trainCount:])


def logisticLossAndGradient(params, features, targets, l2):
    """
    The L2-regularized logistic loss of a single label,

      sum_i log(1 + exp(-y_i (x_i . w + b))) + l2/2 |w|^2

    with y in {-1, +1}. The bias is not regularized.

    @param params numpy.ndarray, w followed by b.

    @param targets numpy.ndarray, Booleans, True for positives.

    @return tuple(float, numpy.ndarray) The loss and its gradient.
    """
    w, b = params[:-1], params[-1]
    signs = np.where(targets, 1.0, -1.0)
    margins = signs * (features @ w + b)
    loss = float(np.logaddexp(0.0, -margins).sum() + 0.5 * l2 * (w @ w))
    residual = -signs * expit(-margins)
    gradient = np.empty_like(params)
    gradient[:-1] = features.T @ residual + l2 * w
    gradient[-1] = residual.sum()
    return loss, gradient


def _hessianProduct(params, vector, features, targets, l2):
    w, b = params[:-1], params[-1]
    p = expit(features @ w + b)
    curvature = p * (1.0 - p)
    projected = curvature * (features @ vector[:-1] + vector[-1])
    product = np.empty_like(vector)
    product[:-1] = features.T @ projected + l2 * vector[:-1]
    product[-1] = projected.sum()
    return product


def _fitLabel(features, targets, l2):
    positives = int(targets.sum())
    negatives = len(targets) - positives
    if positives == 0 or negatives == 0:
        return None, np.log((positives + 0.5) / (negatives + 0.5))

    result = minimize(
        logisticLossAndGradient, np.zeros(features.shape[1] + 1),
        args=(features, targets, l2), jac=True, hessp=_hessianProduct,
        method="trust-ncg",
        options={"gtol": kGradientTolerance, "maxiter": kMaxNewtonIterations})
    return result.x[:-1], float(result.x[-1])


def trainOvrLogreg(features, labelSets, vocabularySize, l2=constants.kDefault_L2, threads=1,
                   logger=None):
    """
    Fits one logistic regression per label on the supplied nodes.

    Labels with no positive, or no negative, example can't be fitted,
    and fall back to zero weights with the smoothed log-odds of the
    training prevalence as bias.

    @param features numpy.ndarray, n x d.

    @param labelSets list(iterable(int)), The labels of each of the n
    nodes.

    @param vocabularySize int, The number of labels L.

    @param l2 float, The regularization strength, >= 0.

    @param threads int [1] Labels fitted concurrently.

    @return OvrLogisticClassifier

    @exception progle.exceptions.ValidationError If a feature is not
    finite.
    """
    logger = logger or defaultLogger()
    features = np.asarray(features, dtype=np.float64)
    if not np.all(np.isfinite(features)):
        raise ValidationError("Features contain NaN or Inf entries")
    if l2 < 0:
        raise ValidationError("The L2 strength must be >= 0, got %r" % (l2,))

    indicators = MultiLabelBinarizer(classes=list(range(vocabularySize))).fit_transform(
        [tuple(labels) for labels in labelSets]).astype(bool)

    def _fit(label):
        return _fitLabel(features, indicators[:, label], l2)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            fits = list(executor.map(_fit, range(vocabularySize)))
    else:
        fits = [_fit(label) for label in range(vocabularySize)]

    weights = np.zeros((vocabularySize, features.shape[1]))
    biases = np.zeros(vocabularySize)
    degenerate = 0
    for label, (w, b) in enumerate(fits):
        if w is None:
            degenerate += 1
        else:
            weights[label] = w
        biases[label] = b
    if degenerate:
        logger.log(
            "%d label(s) lack positive or negative training examples and use a constant score"
            % degenerate, LoggerInterface.kWarning)

    return OvrLogisticClassifier(weights, biases)


def predictTopK(classifier, features, labelCounts):
    """
    Assigns each node its k highest scoring labels. Ties are broken in
    favour of the smaller label id.

    @param labelCounts array-like(int), k for each node, >= 1.

    @return list(tuple(int)) The ascending predicted label ids of each
    node.

    @exception progle.exceptions.ValidationError If a k is < 1 or
    exceeds the number of labels.
    """
    labelCounts = np.asarray(labelCounts, dtype=np.int64)
    labelCount = classifier.labelCount()
    if labelCounts.size and (labelCounts.min() < 1 or labelCounts.max() > labelCount):
        raise ValidationError("Label counts must lie in 1..%d" % labelCount)

    scores = classifier.scores(features)
    ranking = np.argsort(-scores, axis=1, kind="stable")
    return [tuple(sorted(ranking[i, :k].tolist())) for i, k in enumerate(labelCounts)]


def microMacroF1(predicted, truth, vocabularySize):
    """
    Scores predicted label sets against the truth. Macro-F1 averages
    over the labels that occur in the truth or the prediction; labels
    absent from both are left out.

    @return tuple(float, float) micro, macro.
    """
    binarizer = MultiLabelBinarizer(classes=list(range(vocabularySize)))
    yTrue = binarizer.fit_transform([tuple(t) for t in truth])
    yPred = binarizer.transform([tuple(p) for p in predicted])

    micro = f1_score(yTrue, yPred, average="micro", zero_division=0)
    present = np.flatnonzero(yTrue.any(axis=0) | yPred.any(axis=0))
    if not present.size:
        return float(micro), 0.0
    macro = f1_score(yTrue, yPred, average="macro", labels=present, zero_division=0)
    return float(micro), float(macro)


def evaluateEmbedding(vectors, labels, ratios=constants.kDefault_Ratios,
                      trials=constants.kDefault_Trials, seed=constants.kDefault_Seed,
                      l2=constants.kDefault_L2, normalizeRows=True, threads=1, logger=None):
    """
    Runs the full protocol: for every ratio and trial, split the
    labelled nodes, fit on the train side, predict the known number of
    labels of each test node, and score.

    @param vectors numpy.ndarray, One row per node of labels.

    @param labels LabelSet

    @param normalizeRows bool [True] L2-normalize each feature row
    before fitting.

    @return EvalReport
    """
    logger = logger or defaultLogger()
    features = np.asarray(vectors, dtype=np.float64)
    if features.shape[0] != labels.nodeCount():
        raise ValidationError("Features have %d rows but labels cover %d nodes" % (
            features.shape[0], labels.nodeCount()))
    if trials < 1:
        raise ValidationError("At least one trial is needed, got %d" % trials)
    if normalizeRows:
        features = normalize(features, norm="l2", axis=1)

    report = EvalReport()
    trialSeeds = np.random.SeedSequence(seed).spawn(len(ratios) * trials)
    runs = len(trialSeeds)
    for ratioIndex, ratio in enumerate(ratios):
        for trial in range(trials):
            train, test = split(labels, ratio, trialSeeds[ratioIndex * trials + trial])
            classifier = trainOvrLogreg(
                features[train], labels.subset(train), labels.vocabularySize(), l2,
                threads=threads, logger=logger)
            predicted = predictTopK(classifier, features[test], labels.labelCounts(test))
            micro, macro = microMacroF1(
                predicted, labels.subset(test), labels.vocabularySize())
            report.add(ratio, trial, micro, macro)
            logger.progress(
                (ratioIndex * trials + trial + 1) / runs,
                "ratio %g trial %d micro-F1 %.4f" % (ratio, trial, micro))
    return report
