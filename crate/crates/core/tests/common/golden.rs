// Published values: (n, delta, characteristic as printed).
pub const CYCLIC: [(u32, u32, &str); 100] = [
    (1, 1, "1"),
    (2, 2, "1.4142..."),
    (3, 2, "1.1547..."),
    (4, 3, "1.5"),
    (5, 3, "1.3416..."),
    (6, 3, "1.2247..."),
    (7, 3, "1.1338..."),
    (8, 4, "1.4142..."),
    (9, 4, "1.3333..."),
    (10, 4, "1.2649..."),
    (11, 4, "1.2060..."),
    (12, 4, "1.1547..."),
    (13, 4, "1.1094..."),
    (14, 5, "1.3363..."),
    (15, 5, "1.2909..."),
    (16, 5, "1.25"),
    (17, 5, "1.2126..."),
    (18, 5, "1.1785..."),
    (19, 5, "1.1470..."),
    (20, 6, "1.3416..."),
    (21, 5, "1.0910..."),
    (22, 6, "1.2792..."),
    (23, 6, "1.2510..."),
    (24, 6, "1.2247..."),
    (25, 6, "1.2"),
    (26, 6, "1.1766..."),
    (27, 6, "1.1547..."),
    (28, 6, "1.1338..."),
    (29, 7, "1.2998..."),
    (30, 7, "1.2780..."),
    (31, 6, "1.0776..."),
    (32, 7, "1.2374..."),
    (33, 7, "1.2185..."),
    (34, 7, "1.2004..."),
    (35, 7, "1.1832..."),
    (36, 7, "1.1666..."),
    (37, 7, "1.1507..."),
    (38, 8, "1.2977..."),
    (39, 7, "1.1208..."),
    (40, 8, "1.2649..."),
    (41, 8, "1.2493..."),
    (42, 8, "1.2344..."),
    (43, 8, "1.2199..."),
    (44, 8, "1.2060..."),
    (45, 8, "1.1925..."),
    (46, 8, "1.1795..."),
    (47, 8, "1.1669..."),
    (48, 8, "1.1547..."),
    (49, 8, "1.1428..."),
    (50, 8, "1.1313..."),
    (51, 8, "1.1202..."),
    (52, 9, "1.2480..."),
    (53, 9, "1.2362..."),
    (54, 9, "1.2247..."),
    (55, 9, "1.2135..."),
    (56, 9, "1.2026..."),
    (57, 8, "1.0596..."),
    (58, 9, "1.1817..."),
    (59, 9, "1.1717..."),
    (60, 9, "1.1618..."),
    (61, 9, "1.1523..."),
    (62, 9, "1.1430..."),
    (63, 9, "1.1338..."),
    (64, 9, "1.125"),
    (65, 9, "1.1163..."),
    (66, 10, "1.2309..."),
    (67, 10, "1.2216..."),
    (68, 10, "1.2126..."),
    (69, 10, "1.2038..."),
    (70, 10, "1.1952..."),
    (71, 10, "1.1867..."),
    (72, 10, "1.1785..."),
    (73, 9, "1.0533..."),
    (74, 10, "1.1624..."),
    (75, 10, "1.1547..."),
    (76, 10, "1.1470..."),
    (77, 10, "1.1396..."),
    (78, 10, "1.1322..."),
    (79, 10, "1.1250..."),
    (80, 11, "1.2298..."),
    (81, 11, "1.2222..."),
    (82, 11, "1.2147..."),
    (83, 11, "1.2074..."),
    (84, 11, "1.2001..."),
    (85, 11, "1.1931..."),
    (86, 11, "1.1861..."),
    (87, 11, "1.1793..."),
    (88, 11, "1.1726..."),
    (89, 11, "1.1659..."),
    (90, 11, "1.1595..."),
    (91, 10, "1.0482..."),
    (92, 11, "1.1468..."),
    (93, 12, "1.2443..."),
    (94, 12, "1.2377..."),
    (95, 12, "1.2311..."),
    (96, 12, "1.2247..."),
    (97, 12, "1.2184..."),
    (98, 12, "1.2121..."),
    (99, 12, "1.2060..."),
    (100, 12, "1.2"),
];

// Published values: (2n, lb, delta, 2*delta of C_n, characteristic as printed).
pub const DIHEDRAL: [(u32, u32, u32, u32, &str); 40] = [
    (2, 2, 2, 2, "1.4142..."),
    (4, 3, 3, 4, "1.5"),
    (6, 4, 4, 4, "1.6329..."),
    (8, 4, 4, 6, "1.4142..."),
    (10, 5, 5, 6, "1.5811..."),
    (12, 5, 5, 6, "1.4433..."),
    (14, 6, 6, 6, "1.6035..."),
    (16, 6, 6, 8, "1.5"),
    (18, 6, 7, 8, "1.6499..."),
    (20, 7, 7, 8, "1.5652..."),
    (22, 7, 8, 8, "1.7056..."),
    (24, 7, 7, 8, "1.4288..."),
    (26, 8, 8, 8, "1.5689..."),
    (28, 8, 8, 10, "1.5118..."),
    (30, 8, 8, 10, "1.4605..."),
    (32, 8, 9, 10, "1.5909..."),
    (34, 9, 9, 10, "1.5434..."),
    (36, 9, 9, 10, "1.5"),
    (38, 9, 10, 10, "1.6222..."),
    (40, 9, 9, 12, "1.4230..."),
    (42, 10, 10, 10, "1.5430..."),
    (44, 10, 10, 12, "1.5075..."),
    (46, 10, 11, 12, "1.6218..."),
    (48, 10, 10, 12, "1.4433..."),
    (50, 10, 11, 12, "1.5556..."),
    (52, 11, 11, 12, "1.5254..."),
    (54, 11, 12, 12, "1.6329..."),
    (56, 11, 11, 12, "1.4699..."),
    (58, 11, 12, 14, "1.5756..."),
    (60, 11, 12, 14, "1.5491..."),
    (62, 12, 12, 12, "1.5240..."),
    (64, 12, 12, 14, "1.5"),
    (66, 12, 13, 14, "1.6001..."),
    (68, 12, 13, 14, "1.5764..."),
    (70, 12, 12, 14, "1.4342..."),
    (72, 12, 13, 14, "1.5320..."),
    (74, 13, 14, 14, "1.6274..."),
    (76, 13, 14, 16, "1.6059..."),
    (78, 13, 14, 14, "1.5851..."),
    (80, 13, 14, 16, "1.5652..."),
];
