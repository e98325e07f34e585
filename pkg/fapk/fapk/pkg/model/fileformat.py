"""
Line-oriented instance format.

    fapk 1
    sites <m> links <n>
    link <id> <siteA> <siteB>                 (n lines)
    constraints <count>
    c <pathI> <pathJ> <gap> <kind>            (count lines)
    domain <pathId> <k> <f1> ... <fk>         (optional, any number)

`#` starts a comment. Canonical output sorts links by id, constraints by
(i, j) and domain values ascending, and only writes domain lines for paths
that are not on the RITA domain.
"""
from fapk.pkg.common.exceptions import InstanceFormatError
from fapk.pkg.model.choices import ConstraintKind
from fapk.pkg.model.instance import GapConstraint, Instance
from fapk.pkg.model.settings import FORMAT_MAGIC, FORMAT_VERSION


def _tokenize(text):
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split('#', 1)[0].split()
        if tokens:
            yield number, tokens


def _ints(tokens, number):
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise InstanceFormatError(
            'expected integers, got %s' % ' '.join(tokens), number)


class _Reader(object):

    def __init__(self, text):
        self._lines = list(_tokenize(text))
        self._position = 0

    def next(self, keyword, arity=None):
        if self._position >= len(self._lines):
            last = self._lines[-1][0] if self._lines else 0
            raise InstanceFormatError(
                'unexpected end of file, expected `%s`' % keyword, last + 1)
        number, tokens = self._lines[self._position]
        self._position += 1
        if tokens[0] != keyword:
            raise InstanceFormatError(
                'expected `%s`, got `%s`' % (keyword, tokens[0]), number)
        if arity is not None and len(tokens) != arity:
            raise InstanceFormatError(
                '`%s` takes %d fields, got %d'
                % (keyword, arity - 1, len(tokens) - 1), number)
        return number, tokens

    def remaining(self):
        while self._position < len(self._lines):
            yield self._lines[self._position]
            self._position += 1


def read_instance(text, rr_cap=None, far_field_cap=None):
    """
    :param text: str - instance in the fapk text format
    :param rr_cap: int or None - receiver-receiver gap cap for validation
    :param far_field_cap: int or None - far-field gap cap for validation
    :return: Instance
    """
    reader = _Reader(text)

    number, tokens = reader.next(FORMAT_MAGIC, arity=2)
    if tokens[1] != str(FORMAT_VERSION):
        raise InstanceFormatError(
            'unsupported format version %s' % tokens[1], number)

    number, tokens = reader.next('sites', arity=4)
    if tokens[2] != 'links':
        raise InstanceFormatError('expected `links`', number)
    site_count, link_count = _ints([tokens[1], tokens[3]], number)

    links = {}
    for _ in range(link_count):
        number, tokens = reader.next('link', arity=4)
        link_id, site_a, site_b = _ints(tokens[1:], number)
        if link_id in links or not 0 <= link_id < link_count:
            raise InstanceFormatError(
                'link id %d is duplicated or out of range' % link_id, number)
        links[link_id] = (site_a, site_b)

    number, tokens = reader.next('constraints', arity=2)
    constraint_count, = _ints(tokens[1:], number)
    constraints = []
    for _ in range(constraint_count):
        number, tokens = reader.next('c', arity=5)
        i, j, gap = _ints(tokens[1:4], number)
        try:
            kind = ConstraintKind(tokens[4])
        except ValueError:
            raise InstanceFormatError(
                'unknown constraint kind `%s`' % tokens[4], number)
        if i > j:
            i, j = j, i
        constraints.append(GapConstraint(i, j, gap, kind))

    domains = {}
    for number, tokens in reader.remaining():
        if tokens[0] != 'domain' or len(tokens) < 3:
            raise InstanceFormatError(
                'unexpected record `%s`' % tokens[0], number)
        values = _ints(tokens[1:], number)
        path, size, frequencies = values[0], values[1], values[2:]
        if size != len(frequencies):
            raise InstanceFormatError(
                'domain declares %d values, lists %d'
                % (size, len(frequencies)), number)
        if path in domains:
            raise InstanceFormatError(
                'duplicate domain record for path %d' % path, number)
        domains[path] = frequencies

    return Instance(
        site_count, [links[index] for index in range(link_count)],
        constraints, domains, rr_cap=rr_cap, far_field_cap=far_field_cap
    )


def write_instance(instance):
    """
    :param instance: Instance
    :return: str - canonical text
    """
    lines = [
        '%s %d' % (FORMAT_MAGIC, FORMAT_VERSION),
        'sites %d links %d' % (instance.site_count, instance.link_count),
    ]
    lines.extend(
        'link %d %d %d' % (link.id, link.sites[0], link.sites[1])
        for link in instance.links
    )
    lines.append('constraints %d' % len(instance.constraints))
    lines.extend(
        'c %d %d %d %s' % (c.i, c.j, c.gap, c.kind.value)
        for c in instance.constraints
    )
    for path, domain in sorted(instance.domain_overrides.items()):
        lines.append(' '.join(
            ['domain', str(path), str(len(domain))] +
            [str(f) for f in domain]
        ))
    return '\n'.join(lines) + '\n'
