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

import numpy as np

from ..exceptions import ValidationError


__all__ = ['EvalReport']


class EvalReport(object):
    """
    The micro and macro F1 of every (train ratio, trial) run of an
    evaluation, and their per-ratio means and population standard
    deviations.

    The text form is tab separated: a "ratio trial micro macro" table
    with one row per run, a blank line, then a "ratio micro_mean
    micro_std macro_mean macro_std" table with one row per ratio.
    """

    kRowHeader = ("ratio", "trial", "micro", "macro")
    kSummaryHeader = ("ratio", "micro_mean", "micro_std", "macro_mean", "macro_std")

    def __init__(self):
        super(EvalReport, self).__init__()
        self.__rows = []

    def add(self, ratio, trial, micro, macro):
        """
        Records one run.

        @exception progle.exceptions.ValidationError If a score lies
        outside of [0, 1].
        """
        for name, value in (("micro", micro), ("macro", macro)):
            if not 0.0 <= value <= 1.0:
                raise ValidationError("%s-F1 must lie in [0, 1], got %r" % (name, value))
        self.__rows.append((float(ratio), int(trial), float(micro), float(macro)))

    def rows(self):
        """
        @return list(tuple), (ratio, trial, micro, macro) in the order
        they were added.
        """
        return list(self.__rows)

    def ratios(self):
        seen = []
        for ratio, _, _, _ in self.__rows:
            if ratio not in seen:
                seen.append(ratio)
        return seen

    def summary(self):
        """
        @return list(tuple), (ratio, microMean, microStd, macroMean,
        macroStd) for each ratio, in order of first appearance.
        """
        result = []
        for ratio in self.ratios():
            micro = np.array([r[2] for r in self.__rows if r[0] == ratio])
            macro = np.array([r[3] for r in self.__rows if r[0] == ratio])
            result.append((ratio, float(micro.mean()), float(micro.std()),
                           float(macro.mean()), float(macro.std())))
        return result

    def format(self):
        """
        @return str, The tab separated text form.
        """
        lines = ["\t".join(self.kRowHeader)]
        for ratio, trial, micro, macro in self.__rows:
            lines.append("%g\t%d\t%.6f\t%.6f" % (ratio, trial, micro, macro))
        lines.append("")
        lines.append("\t".join(self.kSummaryHeader))
        for ratio, microMean, microStd, macroMean, macroStd in self.summary():
            lines.append("%g\t%.6f\t%.6f\t%.6f\t%.6f" % (
                ratio, microMean, microStd, macroMean, macroStd))
        return "\n".join(lines) + "\n"
