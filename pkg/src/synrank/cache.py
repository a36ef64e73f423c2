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
import logging
from typing import Any, List, MutableMapping, Optional

logger = logging.getLogger(__name__)


class Missing:
    pass


Missing = Missing()


def fetch(id: str, caches: Optional[List[MutableMapping]]) -> Any:
    """Look 'id' up through a list of dict-like caches

    Caches before the one holding the value are outdated and receive a copy.

    >>> first, second = {}, {"k": (0.4, 0.6)}
    >>> fetch("k", [first, second])
    (0.4, 0.6)
    >>> first
    {'k': (0.4, 0.6)}
    >>> fetch("other", [first, second]) is Missing
    True
    """
    if not caches:
        return Missing
    outdated_caches = []
    for cache in caches:
        if id in cache:
            val = cache[id]
            for outdated_cache in outdated_caches:
                outdated_cache[id] = val
            logger.debug("Cache hit for %s", id)
            return val
        outdated_caches.append(cache)
    return Missing


def store(id: str, value, caches: Optional[List[MutableMapping]]):
    """Write 'value' under 'id' in every cache that lacks it

    >>> a, b = {}, {"k": 1}
    >>> store("k", 2, [a, b])
    >>> a, b
    ({'k': 2}, {'k': 1})
    """
    for cache in caches or []:
        if id not in cache:
            cache[id] = value
