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
import pickle
from functools import cached_property

from hosh import Hosh


def value2hosh(value) -> Hosh:
    """Identify a plain value (str, number, tuple, ...) by its pickled content

    >>> value2hosh(("rash", "body")) == value2hosh(("rash", "body"))
    True
    >>> value2hosh(("rash", "body")) == value2hosh(("body", "rash"))
    False
    """
    try:
        return Hosh(pickle.dumps(value, protocol=5))
    except (TypeError, pickle.PicklingError) as e:  # pragma: no cover
        raise Exception(f"Cannot pickle. Pickling is needed to hosh values ({value}): {e}")


class Identified:
    """Mixin for objects identified by a content-derived hosh

    Subclasses provide 'hosh'; 'id' and the '*' composition come for free.
    """

    hosh: Hosh

    @cached_property
    def id(self) -> str:
        return self.hosh.id

    def __mul__(self, other):
        return self.hosh * (other if isinstance(other, Hosh) else other.hosh)

    def __rmul__(self, other):
        return (other if isinstance(other, Hosh) else other.hosh) * self.hosh
