import re

from utils.errors import ProfileError

AGENT_NAME_PATTERN = r'^[^\s:#,;=]+$'


class ProfileValidator:
    """Checks the structural rules every preference profile must obey"""

    @staticmethod
    def validate_agent_name(name):
        """Validate agent name format"""
        if not name:
            return False
        return bool(re.match(AGENT_NAME_PATTERN, name))

    @staticmethod
    def validate_list(owner, entries, n):
        """Validate one preference list, returns (bool, message)"""
        if not entries:
            return False, f'agent {owner} has an empty preference list'
        seen = set()
        for other in entries:
            if not 0 <= other < n:
                return False, f'agent {owner} lists unknown agent {other}'
            if other == owner:
                return False, f'agent {owner} lists itself'
            if other in seen:
                return False, f'agent {owner} lists agent {other} twice'
            seen.add(other)
        return True, 'valid'

    @staticmethod
    def collect_errors(names, prefs, bipartition=None):
        """Collect every rule violation of a profile given by ids"""
        errors = []
        n = len(names)

        if len(prefs) != n:
            errors.append(f'{n} agents but {len(prefs)} preference lists')
            return errors

        if len(set(names)) != n:
            seen = set()
            for name in names:
                if name in seen:
                    errors.append(f'duplicate agent name {name}')
                seen.add(name)

        for name in names:
            if not ProfileValidator.validate_agent_name(name):
                errors.append(f'invalid agent name {name!r}')

        for owner, entries in enumerate(prefs):
            ok, message = ProfileValidator.validate_list(owner, entries, n)
            if not ok:
                errors.append(message.replace(f'agent {owner}', f'agent {names[owner]}', 1))
        if errors:
            return errors

        # Symmetry of acceptability
        accepted = [set(entries) for entries in prefs]
        for owner, entries in enumerate(prefs):
            for other in entries:
                if owner not in accepted[other]:
                    errors.append(
                        f'asymmetric acceptability: {names[owner]} lists {names[other]} '
                        f'but {names[other]} does not list {names[owner]}'
                    )

        # Bipartition
        if bipartition is not None:
            left, right = bipartition
            if left & right:
                errors.append('bipartition sides overlap')
            if len(left) != len(right):
                errors.append(f'bipartition sides differ in size ({len(left)} vs {len(right)})')
            if (left | right) != set(range(n)):
                errors.append('bipartition does not cover every agent')
            for owner, entries in enumerate(prefs):
                side = left if owner in left else right
                for other in entries:
                    if other in side:
                        errors.append(
                            f'bipartition violated: {names[owner]} and {names[other]} are on the same side'
                        )
        return errors

    @staticmethod
    def validate(names, prefs, bipartition=None):
        """Raise ProfileError listing every violation"""
        errors = ProfileValidator.collect_errors(names, prefs, bipartition)
        if errors:
            raise ProfileError(errors)
