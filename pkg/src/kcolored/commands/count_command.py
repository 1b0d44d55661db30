"""count: total and monochromatic crossings of an instance"""
from kcolored.coloring import count_crossings, count_monochromatic
from kcolored.domain.messages import CountReport, InstanceFile
from kcolored.geometry import validate_general_position

from .base_command import BaseCommand


class CountCommand(BaseCommand):
    def __init__(self, run_id: str | None = None):
        super().__init__("count", run_id)

    def execute(self, instance: InstanceFile) -> CountReport:
        points = instance.point_set()
        chi = instance.edge_coloring()
        table = validate_general_position(points)
        report = CountReport(
            run_id=self.run_id,
            k=instance.k,
            n=instance.n,
            crossings=count_crossings(points, table),
            monochromatic=count_monochromatic(points, chi, table),
        )
        self.log_event(
            "count_completed",
            {"message": f"n={report.n} k={report.k}: {report.monochromatic}/{report.crossings} monochromatic"},
        )
        return report
