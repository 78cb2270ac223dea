# Default directory where report files are written (RELMIN_REPORT_DIRECTORY overrides it)
REPORT_DIRECTORY = "relmin_reports"
# File names inside each report subfolder
REPORT_JSON = "report.json"
PROPERTIES_CSV = "properties.csv"
SUMMARY_TEXT = "summary.txt"
