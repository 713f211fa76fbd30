# Catalog package: family modules are named fam_* and discovered by the registry.
