from hopfbrace.hbcli.cli import main

raise SystemExit(main())
