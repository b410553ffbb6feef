//! Frozen Sorgenfrey values `(x, y, s(x, y))`, computed with an independent
//! exact-fraction implementation of the defining case split.

pub const SORGENFREY_TABLE: [(&str, &str, &str); 50] = [
    ("0", "1/2", "1/2"),
    ("1/2", "0", "1"),
    ("3", "3", "0"),
    ("0", "1", "1"),
    ("0", "2", "2"),
    ("2", "0", "1"),
    ("-1/3", "1/3", "2/3"),
    ("1/3", "-1/3", "1"),
    ("-5/2", "-5/2", "0"),
    ("7/8", "15/16", "1/16"),
    ("-36/5", "-86/5", "1"),
    ("-16/5", "-67/10", "1"),
    ("16/5", "57/10", "5/2"),
    ("-7/4", "-7/8", "7/8"),
    ("8", "-20", "1"),
    ("40", "157/4", "1"),
    ("-37/3", "-37/3", "0"),
    ("13/5", "13/5", "0"),
    ("7/2", "7/2", "0"),
    ("15/2", "5", "1"),
    ("-7/8", "97/8", "13"),
    ("-7/2", "-7/2", "0"),
    ("-17", "-34", "1"),
    ("-31/7", "-227/7", "1"),
    ("23/7", "202/21", "19/3"),
    ("-9/2", "-9/2", "0"),
    ("3", "9", "6"),
    ("37/8", "9/4", "1"),
    ("-17", "-2", "15"),
    ("4", "4", "0"),
    ("20/3", "79/6", "13/2"),
    ("-19/2", "-277/32", "27/32"),
    ("-21", "-57/2", "1"),
    ("19/16", "107/16", "11/2"),
    ("17/4", "-95/4", "1"),
    ("39/16", "-11/48", "1"),
    ("-9/2", "-85/6", "1"),
    ("5/16", "13/32", "3/32"),
    ("-34", "-163/4", "1"),
    ("7/5", "158/45", "19/9"),
    ("-1", "-4", "1"),
    ("35/3", "119/12", "1"),
    ("-8/3", "-265/96", "1"),
    ("5", "-21", "1"),
    ("-25/7", "-4/7", "3"),
    ("-4", "-20/3", "1"),
    ("0", "-12", "1"),
    ("-3", "-3", "0"),
    ("18", "297/16", "9/16"),
    ("5/2", "43/18", "1"),
];
