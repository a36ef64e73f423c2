#  Copyright (c) 2023. The synrank contributors.
#  This file is part of the synrank project.
#
#  synrank is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  synrank is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with synrank.  If not, see <http://www.gnu.org/licenses/>.
#


class SynRankError(Exception):
    """Base class of every domain failure raised by synrank"""


class InvalidParameter(SynRankError):
    pass


class InvalidFeature(SynRankError):
    pass


class EmptyExplanation(SynRankError):
    pass


class DuplicateFeature(SynRankError):
    pass


class InvalidEvent(SynRankError):
    pass


class InvalidRecord(SynRankError):
    pass


class ConflictingChain(SynRankError):
    pass


class AmbiguousTarget(SynRankError):
    pass


class ZeroVector(SynRankError):
    pass


class MalformedEmbedding(SynRankError):
    pass


class MalformedLexicon(SynRankError):
    pass


class MalformedLine(SynRankError):
    """A corpus line could not be parsed

    >>> e = MalformedLine(3, "missing field 'id'")
    >>> e.line_no, str(e)
    (3, "line 3: missing field 'id'")
    """

    def __init__(self, line_no: int, cause):
        self.line_no = line_no
        self.cause = cause
        super().__init__(f"line {line_no}: {cause}")


class DuplicateRecord(SynRankError):
    pass


class EmptyCorpus(SynRankError):
    pass


class NoCandidates(SynRankError):
    pass


class UnknownMeasure(SynRankError):
    pass


class UnknownProvider(SynRankError):
    pass
