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
from json import JSONEncoder

from synrank.explanation import AdversarialRecord


class CustomJSONEncoder(JSONEncoder):
    """Writes adversarial records in their canonical form

    >>> import json
    >>> from synrank.explanation import parse_explanation
    >>> A = parse_explanation(["rash", "body"])
    >>> json.loads(json.dumps([AdversarialRecord("r1", "", "", A, A)], cls=CustomJSONEncoder))[0]["original_explanation"]
    ['rash', 'body']
    """

    def default(self, obj):
        if isinstance(obj, AdversarialRecord):
            from synrank.serialization.records import record2dict

            return record2dict(obj)
        return JSONEncoder.default(self, obj)  # pragma: no cover
