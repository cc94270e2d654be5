from signed_spectra.main import cli

cli(prog_name="signed-spectra")
