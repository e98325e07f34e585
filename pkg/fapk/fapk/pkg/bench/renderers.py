from rest_framework.renderers import JSONRenderer
from rest_framework_csv.renderers import CSVRenderer
from texttable import Texttable

from fapk.pkg.bench.choices import ReportFormat
from fapk.pkg.bench.serializers import ResultRowSerializer
from fapk.pkg.bench.settings import REPORT_COLUMNS
from fapk.pkg.search.choices import SearchMode


class ResultCSVRenderer(CSVRenderer):
    header = list(REPORT_COLUMNS)

    def tablize(self, data, header=None, labels=None):
        if not data:
            return [list(header or self.header)]
        return super(ResultCSVRenderer, self).tablize(
            data, header=header, labels=labels)


def _cell(row):
    text = '%.2f (%d)' % (row.mean_links, row.solved)
    if row.mode == str(SearchMode.AvFilt):
        text += ' [%.1f]' % row.filtered
    return text


def _budget_label(budget):
    return 'unlimited' if budget is None else '%gs' % budget


def render_text(table):
    """
    One block per budget: a line per group, a column per mode/strategy
    with mean links, solved count and, for av-filt, filtered values.
    The cross-budget summary comes last.
    """
    columns = table.settings_columns
    blocks = []
    for budget in table.budgets:
        text_table = Texttable(max_width=0)
        text_table.set_deco(Texttable.HEADER | Texttable.VLINES)
        text_table.set_cols_dtype(['t'] * (2 + len(columns)))
        text_table.header(['group', 'n'] + [
            '%s %s' % (mode, strategy) for mode, strategy in columns])
        for group in table.groups:
            cells = [table.row(budget, group, mode, strategy)
                     for mode, strategy in columns]
            sizes = [cell.n for cell in cells if cell is not None]
            text_table.add_row([group, str(sizes[0]) if sizes else '-'] + [
                _cell(cell) if cell is not None else '-' for cell in cells])
        blocks.append('Budget %s\n%s' % (_budget_label(budget),
                                         text_table.draw()))

    summary = Texttable(max_width=0)
    summary.set_deco(Texttable.HEADER)
    summary.set_cols_dtype(['t', 't', 't', 't'])
    summary.header(['budget', 'mode', 'strategy', 'mean_links'])
    for item in table.summary():
        summary.add_row([_budget_label(item.budget), item.mode,
                         item.strategy, '%.2f' % item.mean_links])
    blocks.append('Global means\n%s' % summary.draw())
    return '\n\n'.join(blocks) + '\n'


def emit(table, report_format):
    """
    :param table: ResultTable
    :param report_format: ReportFormat or its value
    :return: str
    """
    try:
        report_format = ReportFormat(report_format)
    except ValueError:
        raise ValueError('Unknown report format: %r' % (report_format,))

    if report_format == ReportFormat.Text:
        return render_text(table)
    data = ResultRowSerializer(table.rows, many=True).data
    if report_format == ReportFormat.Json:
        return JSONRenderer().render(
            data, renderer_context={'indent': 2}).decode('utf-8') + '\n'
    rendered = ResultCSVRenderer().render(data)
    if isinstance(rendered, bytes):
        rendered = rendered.decode('utf-8')
    return rendered
