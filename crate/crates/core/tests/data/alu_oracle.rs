// (mnemonic, word, x5, x6, x7 after one step), rd = x7, rs1 = x5, rs2 = x6.
pub const ALU_ORACLE: &[(&str, u32, u32, u32, u32)] = &[
    ("add", 0x006283b3, 0x336da9d8, 0x00000001, 0x336da9d9),
    ("add", 0x006283b3, 0x80986de3, 0xca8b4382, 0x4b23b165),
    ("add", 0x006283b3, 0xffffffff, 0x9e1165c6, 0x9e1165c5),
    ("add", 0x006283b3, 0x00000021, 0xecb1488c, 0xecb148ad),
    ("add", 0x006283b3, 0x00000020, 0x0c91c843, 0x0c91c863),
    ("add", 0x006283b3, 0x00000002, 0x1c6557e6, 0x1c6557e8),
    ("add", 0x006283b3, 0xffffffff, 0xd1933512, 0xd1933511),
    ("add", 0x006283b3, 0x00000020, 0xe166ae45, 0xe166ae65),
    ("add", 0x006283b3, 0xae7f4d8a, 0x7c34dea2, 0x2ab42c2c),
    ("add", 0x006283b3, 0x00000001, 0xb0608fcf, 0xb0608fd0),
    ("add", 0x006283b3, 0x00000001, 0xec362abf, 0xec362ac0),
    ("add", 0x006283b3, 0x00000000, 0x00000001, 0x00000001),
    ("add", 0x006283b3, 0x18e96c55, 0x1440af79, 0x2d2a1bce),
    ("add", 0x006283b3, 0x75addd99, 0xe78a9bc3, 0x5d38795c),
    ("add", 0x006283b3, 0x793a9253, 0xd7b599dc, 0x50f02c2f),
    ("add", 0x006283b3, 0x6e402ffb, 0x07aa7081, 0x75eaa07c),
    ("add", 0x006283b3, 0xf28a0759, 0xad62c4f8, 0x9feccc51),
    ("add", 0x006283b3, 0x3290ded0, 0x059c57f8, 0x382d36c8),
    ("add", 0x006283b3, 0x00000001, 0xffffffff, 0x00000000),
    ("add", 0x006283b3, 0x00000000, 0xb419e82a, 0xb419e82a),
    ("add", 0x006283b3, 0xc595c3c0, 0x00000021, 0xc595c3e1),
    ("add", 0x006283b3, 0xffffffff, 0x304a45e5, 0x304a45e4),
    ("add", 0x006283b3, 0x1474ade7, 0xaf65bd8c, 0xc3da6b73),
    ("add", 0x006283b3, 0xaff2b363, 0x00000020, 0xaff2b383),
    ("add", 0x006283b3, 0xec5b9d09, 0x74981878, 0x60f3b581),
    ("add", 0x006283b3, 0xcf255960, 0xa6eb96b0, 0x7610f010),
    ("add", 0x006283b3, 0xd68c53ed, 0x13e827b8, 0xea747ba5),
    ("add", 0x006283b3, 0xffffffff, 0x00000021, 0x00000020),
    ("add", 0x006283b3, 0xb9ff2eb8, 0x80000000, 0x39ff2eb8),
    ("add", 0x006283b3, 0x0b8dfc74, 0x893d5685, 0x94cb52f9),
    ("add", 0x006283b3, 0xc0590236, 0x813373dc, 0x418c7612),
    ("add", 0x006283b3, 0xcae13e2b, 0x00000020, 0xcae13e4b),
    ("add", 0x006283b3, 0x27a5dec8, 0xfffffffe, 0x27a5dec6),
    ("add", 0x006283b3, 0x00000002, 0x9cdd878a, 0x9cdd878c),
    ("add", 0x006283b3, 0xd16eef7b, 0x97f87d9a, 0x69676d15),
    ("add", 0x006283b3, 0xfffffffe, 0x00000021, 0x0000001f),
    ("add", 0x006283b3, 0x406288d0, 0x47942145, 0x87f6aa15),
    ("add", 0x006283b3, 0xc0cd1db5, 0x93c1836e, 0x548ea123),
    ("add", 0x006283b3, 0x339f564c, 0x00000002, 0x339f564e),
    ("add", 0x006283b3, 0x9df30a9e, 0x80000000, 0x1df30a9e),
    ("sub", 0x406283b3, 0x00000020, 0x00000000, 0x00000020),
    ("sub", 0x406283b3, 0xb05ab8a9, 0x33fab3bd, 0x7c6004ec),
    ("sub", 0x406283b3, 0x00000002, 0x12345678, 0xedcba98a),
    ("sub", 0x406283b3, 0xf7c780c5, 0x6523ceb8, 0x92a3b20d),
    ("sub", 0x406283b3, 0x80000000, 0x80000000, 0x00000000),
    ("sub", 0x406283b3, 0x41d4b64a, 0x0777da6d, 0x3a5cdbdd),
    ("sub", 0x406283b3, 0x38f4e7fc, 0x00000020, 0x38f4e7dc),
    ("sub", 0x406283b3, 0xac8c7160, 0x00000000, 0xac8c7160),
    ("sub", 0x406283b3, 0xb5f7bd93, 0x12345678, 0xa3c3671b),
    ("sub", 0x406283b3, 0x85f44990, 0x45b7b495, 0x403c94fb),
    ("sub", 0x406283b3, 0x41704fee, 0xfffffffe, 0x41704ff0),
    ("sub", 0x406283b3, 0x651236ce, 0x2c0d9917, 0x39049db7),
    ("sub", 0x406283b3, 0xad423acb, 0x00000020, 0xad423aab),
    ("sub", 0x406283b3, 0xd8838945, 0xc74677b0, 0x113d1195),
    ("sub", 0x406283b3, 0xa04163b5, 0x222b8e9e, 0x7e15d517),
    ("sub", 0x406283b3, 0x226f22ea, 0xc14e2daa, 0x6120f540),
    ("sub", 0x406283b3, 0x7216397d, 0x0000001f, 0x7216395e),
    ("sub", 0x406283b3, 0x7fffffff, 0x804a6a0d, 0xffb595f2),
    ("sub", 0x406283b3, 0x1c3f2923, 0x96d13ea4, 0x856dea7f),
    ("sub", 0x406283b3, 0xbf3209b7, 0x00000001, 0xbf3209b6),
    ("sub", 0x406283b3, 0xf5711a7d, 0x0000001f, 0xf5711a5e),
    ("sub", 0x406283b3, 0x041991a2, 0x7cda4d78, 0x873f442a),
    ("sub", 0x406283b3, 0xa98726c4, 0xafcaf7f9, 0xf9bc2ecb),
    ("sub", 0x406283b3, 0xff428833, 0x00000021, 0xff428812),
    ("sub", 0x406283b3, 0x7fffffff, 0x9e3a4de8, 0xe1c5b217),
    ("sub", 0x406283b3, 0x29204a15, 0x00000001, 0x29204a14),
    ("sub", 0x406283b3, 0xd83868bc, 0xf0f6b5b8, 0xe741b304),
    ("sub", 0x406283b3, 0xed94f010, 0x80000000, 0x6d94f010),
    ("sub", 0x406283b3, 0x0000001f, 0x00000002, 0x0000001d),
    ("sub", 0x406283b3, 0xfffffffe, 0x00000020, 0xffffffde),
    ("sub", 0x406283b3, 0xc83b44f3, 0x03278031, 0xc513c4c2),
    ("sub", 0x406283b3, 0x4c3b446d, 0xd5573562, 0x76e40f0b),
    ("sub", 0x406283b3, 0x70e4c442, 0x02c68d04, 0x6e1e373e),
    ("sub", 0x406283b3, 0x00000020, 0xd28b6115, 0x2d749f0b),
    ("sub", 0x406283b3, 0x00000000, 0x80000000, 0x80000000),
    ("sub", 0x406283b3, 0x80000000, 0xf942c898, 0x86bd3768),
    ("sub", 0x406283b3, 0x61b7d30a, 0x00000001, 0x61b7d309),
    ("sub", 0x406283b3, 0x4ef877a5, 0x00000021, 0x4ef87784),
    ("sub", 0x406283b3, 0xb92cb89d, 0xed711c75, 0xcbbb9c28),
    ("sub", 0x406283b3, 0x00000020, 0xd050cf8d, 0x2faf3093),
    ("sll", 0x006293b3, 0x00000002, 0x12345678, 0x02000000),
    ("sll", 0x006293b3, 0x391a6427, 0xfdf9cd15, 0x84e00000),
    ("sll", 0x006293b3, 0x266f49f7, 0x359b4d44, 0x66f49f70),
    ("sll", 0x006293b3, 0x0000001f, 0x8f980448, 0x00001f00),
    ("sll", 0x006293b3, 0x39a3dbe2, 0x490e2b35, 0x7c400000),
    ("sll", 0x006293b3, 0x00000020, 0xffffffff, 0x00000000),
    ("sll", 0x006293b3, 0x53ab1d2b, 0x4c1b92b6, 0x4ac00000),
    ("sll", 0x006293b3, 0x00000000, 0xe2ddf812, 0x00000000),
    ("sll", 0x006293b3, 0x211d8c07, 0xfa29b440, 0x211d8c07),
    ("sll", 0x006293b3, 0x7fffffff, 0x872a4c3c, 0xf0000000),
    ("sll", 0x006293b3, 0xffffffff, 0xffffffff, 0x80000000),
    ("sll", 0x006293b3, 0x12345678, 0xde0ea064, 0x23456780),
    ("sll", 0x006293b3, 0x00000001, 0xa0cfa2d5, 0x00200000),
    ("sll", 0x006293b3, 0x7fffffff, 0x88f42d7b, 0xf8000000),
    ("sll", 0x006293b3, 0xfffffffe, 0x00000000, 0xfffffffe),
    ("sll", 0x006293b3, 0x00000000, 0x00000021, 0x00000000),
    ("sll", 0x006293b3, 0x676dbba9, 0xf38aa6d2, 0xeea40000),
    ("sll", 0x006293b3, 0x12345678, 0x5f9751ab, 0xa2b3c000),
    ("sll", 0x006293b3, 0x9430c79c, 0xfb096d11, 0x8f380000),
    ("sll", 0x006293b3, 0x00000002, 0x31bee6e4, 0x00000020),
    ("sll", 0x006293b3, 0xffffffff, 0x95d53d2e, 0xffffc000),
    ("sll", 0x006293b3, 0x7fc63915, 0x81bbc1bc, 0x50000000),
    ("sll", 0x006293b3, 0x00000020, 0xa64738b5, 0x04000000),
    ("sll", 0x006293b3, 0xdfc4b768, 0xffffffff, 0x00000000),
    ("sll", 0x006293b3, 0x9c35a7df, 0x095bd6de, 0xc0000000),
    ("sll", 0x006293b3, 0x00000000, 0x00000001, 0x00000000),
    ("sll", 0x006293b3, 0x057ba241, 0x08fe76b4, 0x24100000),
    ("sll", 0x006293b3, 0xe0eef0b8, 0x12df1378, 0xb8000000),
    ("sll", 0x006293b3, 0x5a02208e, 0x0000001f, 0x00000000),
    ("sll", 0x006293b3, 0x12345678, 0x1739d2d1, 0xacf00000),
    ("sll", 0x006293b3, 0x03d6456e, 0x38c1a5b0, 0x456e0000),
    ("sll", 0x006293b3, 0x3867b3d6, 0xdd9f06b1, 0x67ac0000),
    ("sll", 0x006293b3, 0x80000000, 0x527ffe99, 0x00000000),
    ("sll", 0x006293b3, 0x00000001, 0x00000021, 0x00000002),
    ("sll", 0x006293b3, 0xe7968db4, 0x78e95ebd, 0x80000000),
    ("sll", 0x006293b3, 0x12345678, 0x87c974c9, 0x68acf000),
    ("sll", 0x006293b3, 0xe12ca1ad, 0xd7033a87, 0x9650d680),
    ("sll", 0x006293b3, 0x12345678, 0x5fc4293d, 0x00000000),
    ("sll", 0x006293b3, 0x00000001, 0xeaa3a19e, 0x40000000),
    ("sll", 0x006293b3, 0xd65052dc, 0xd05e8578, 0xdc000000),
    ("slt", 0x0062a3b3, 0x00000002, 0x00000001, 0x00000000),
    ("slt", 0x0062a3b3, 0x0000001f, 0x74818f3e, 0x00000001),
    ("slt", 0x0062a3b3, 0x4b29c080, 0xd3b606e8, 0x00000000),
    ("slt", 0x0062a3b3, 0xa27795fd, 0x8fb4dd3b, 0x00000000),
    ("slt", 0x0062a3b3, 0xc1a56bff, 0xdbff2581, 0x00000001),
    ("slt", 0x0062a3b3, 0x00000001, 0x7fffffff, 0x00000001),
    ("slt", 0x0062a3b3, 0x75982d2b, 0xf90a901c, 0x00000000),
    ("slt", 0x0062a3b3, 0x00000000, 0x00000021, 0x00000001),
    ("slt", 0x0062a3b3, 0xf1a11256, 0x80000000, 0x00000000),
    ("slt", 0x0062a3b3, 0x35c00a21, 0x766377e2, 0x00000001),
    ("slt", 0x0062a3b3, 0x78d06912, 0x00000021, 0x00000000),
    ("slt", 0x0062a3b3, 0x8878058f, 0x1b1d07b7, 0x00000001),
    ("slt", 0x0062a3b3, 0xece5b29a, 0x12345678, 0x00000001),
    ("slt", 0x0062a3b3, 0xb76582db, 0x5ce7c352, 0x00000001),
    ("slt", 0x0062a3b3, 0x2e04616a, 0x00000000, 0x00000000),
    ("slt", 0x0062a3b3, 0xc50059f7, 0x00000001, 0x00000001),
    ("slt", 0x0062a3b3, 0x00000000, 0x00000000, 0x00000000),
    ("slt", 0x0062a3b3, 0xd50cc955, 0x03886a83, 0x00000001),
    ("slt", 0x0062a3b3, 0x97facff1, 0x74a689c9, 0x00000001),
    ("slt", 0x0062a3b3, 0xd2be1ae3, 0x12345678, 0x00000001),
    ("slt", 0x0062a3b3, 0xb0923336, 0x00000020, 0x00000001),
    ("slt", 0x0062a3b3, 0x00000001, 0x0000001f, 0x00000001),
    ("slt", 0x0062a3b3, 0x0000001f, 0x70d79d09, 0x00000001),
    ("slt", 0x0062a3b3, 0xb71e3048, 0x00000021, 0x00000001),
    ("slt", 0x0062a3b3, 0x9b700967, 0x12345678, 0x00000001),
    ("slt", 0x0062a3b3, 0x1d4465c3, 0x00000000, 0x00000000),
    ("slt", 0x0062a3b3, 0x00000020, 0xfa521f82, 0x00000000),
    ("slt", 0x0062a3b3, 0xc1796795, 0x6ed825ec, 0x00000001),
    ("slt", 0x0062a3b3, 0x00000002, 0x00000002, 0x00000000),
    ("slt", 0x0062a3b3, 0xfffffffe, 0x3ce81311, 0x00000001),
    ("slt", 0x0062a3b3, 0x80000000, 0xcd164df4, 0x00000001),
    ("slt", 0x0062a3b3, 0xf677971e, 0x00000021, 0x00000001),
    ("slt", 0x0062a3b3, 0x4adeba2e, 0x41d95188, 0x00000000),
    ("slt", 0x0062a3b3, 0x006b9801, 0x10fd8759, 0x00000001),
    ("slt", 0x0062a3b3, 0x00000021, 0xd7ea8280, 0x00000000),
    ("slt", 0x0062a3b3, 0x4adf005c, 0xbbf579f6, 0x00000000),
    ("slt", 0x0062a3b3, 0x967986a6, 0x00000021, 0x00000001),
    ("slt", 0x0062a3b3, 0x6edd139e, 0x65c4a6ec, 0x00000000),
    ("slt", 0x0062a3b3, 0xcf6fecd7, 0x56d04b6e, 0x00000001),
    ("slt", 0x0062a3b3, 0xbabdb9e6, 0x0a780e49, 0x00000001),
    ("sltu", 0x0062b3b3, 0xbe1d8a11, 0x00000001, 0x00000000),
    ("sltu", 0x0062b3b3, 0x7f452f30, 0x51b97e15, 0x00000000),
    ("sltu", 0x0062b3b3, 0x735b5aed, 0xa5c61989, 0x00000001),
    ("sltu", 0x0062b3b3, 0xda9d00e7, 0x4632c4a7, 0x00000000),
    ("sltu", 0x0062b3b3, 0x00000021, 0x00000002, 0x00000000),
    ("sltu", 0x0062b3b3, 0x00000002, 0x0000001f, 0x00000001),
    ("sltu", 0x0062b3b3, 0xc0135a7d, 0x00000020, 0x00000000),
    ("sltu", 0x0062b3b3, 0x51c3b38e, 0xffffffff, 0x00000001),
    ("sltu", 0x0062b3b3, 0x32d66704, 0x4a6652c4, 0x00000001),
    ("sltu", 0x0062b3b3, 0x7fffffff, 0x25fa19cd, 0x00000000),
    ("sltu", 0x0062b3b3, 0x80000000, 0x2fd13a29, 0x00000000),
    ("sltu", 0x0062b3b3, 0x24531314, 0x6aead118, 0x00000001),
    ("sltu", 0x0062b3b3, 0x89bb3941, 0x00000020, 0x00000000),
    ("sltu", 0x0062b3b3, 0x0385434b, 0xc13ed5e6, 0x00000001),
    ("sltu", 0x0062b3b3, 0x1f87d865, 0xdc86851e, 0x00000001),
    ("sltu", 0x0062b3b3, 0x0000001f, 0x9ea22e77, 0x00000001),
    ("sltu", 0x0062b3b3, 0x1e3f956d, 0x12345678, 0x00000000),
    ("sltu", 0x0062b3b3, 0xffffffff, 0xa1e9f243, 0x00000000),
    ("sltu", 0x0062b3b3, 0x3f3abbe6, 0x9f81d9a7, 0x00000001),
    ("sltu", 0x0062b3b3, 0xeb32d953, 0xff63b6c5, 0x00000001),
    ("sltu", 0x0062b3b3, 0xffffffff, 0x00000020, 0x00000000),
    ("sltu", 0x0062b3b3, 0x0b2cec56, 0xb4b29f0d, 0x00000001),
    ("sltu", 0x0062b3b3, 0xfffffffe, 0x00000021, 0x00000000),
    ("sltu", 0x0062b3b3, 0x539413db, 0xfac59279, 0x00000001),
    ("sltu", 0x0062b3b3, 0xb597551c, 0x80000000, 0x00000000),
    ("sltu", 0x0062b3b3, 0x0d30c49a, 0xd762c1d8, 0x00000001),
    ("sltu", 0x0062b3b3, 0x3abe9c5e, 0xfffffffe, 0x00000001),
    ("sltu", 0x0062b3b3, 0x80000000, 0x20883e5d, 0x00000000),
    ("sltu", 0x0062b3b3, 0xea1635d3, 0x39a4d892, 0x00000000),
    ("sltu", 0x0062b3b3, 0x4e2703e3, 0xfffffffe, 0x00000001),
    ("sltu", 0x0062b3b3, 0x3deb2a05, 0xb9ae37dd, 0x00000001),
    ("sltu", 0x0062b3b3, 0x0000001f, 0x2b0fbc66, 0x00000001),
    ("sltu", 0x0062b3b3, 0x6b0d5331, 0x0000001f, 0x00000000),
    ("sltu", 0x0062b3b3, 0x12345678, 0x00000000, 0x00000000),
    ("sltu", 0x0062b3b3, 0x07384949, 0x00000001, 0x00000000),
    ("sltu", 0x0062b3b3, 0xb3c14668, 0x68a2733f, 0x00000000),
    ("sltu", 0x0062b3b3, 0xedb97c96, 0x36bc696f, 0x00000000),
    ("sltu", 0x0062b3b3, 0x8d10d79f, 0xfdcbf861, 0x00000001),
    ("sltu", 0x0062b3b3, 0x69017525, 0x66e4cce7, 0x00000000),
    ("sltu", 0x0062b3b3, 0xf6dd3637, 0x44a81ac4, 0x00000000),
    ("xor", 0x0062c3b3, 0xf551de19, 0x6aa4674f, 0x9ff5b956),
    ("xor", 0x0062c3b3, 0xc3bc2c61, 0x408a0a12, 0x83362673),
    ("xor", 0x0062c3b3, 0x7fffffff, 0x1b33d48d, 0x64cc2b72),
    ("xor", 0x0062c3b3, 0x12345678, 0xfffffffe, 0xedcba986),
    ("xor", 0x0062c3b3, 0x7fffffff, 0x80000000, 0xffffffff),
    ("xor", 0x0062c3b3, 0xfd76f76e, 0xfa8a51b1, 0x07fca6df),
    ("xor", 0x0062c3b3, 0x06f5a185, 0x2aa49035, 0x2c5131b0),
    ("xor", 0x0062c3b3, 0x81b263dd, 0x12345678, 0x938635a5),
    ("xor", 0x0062c3b3, 0xb834592e, 0x287ecf60, 0x904a964e),
    ("xor", 0x0062c3b3, 0xffffffff, 0x48bf48a0, 0xb740b75f),
    ("xor", 0x0062c3b3, 0xe2a3e5ec, 0x0e346bc7, 0xec978e2b),
    ("xor", 0x0062c3b3, 0x9610aa70, 0x7fffffff, 0xe9ef558f),
    ("xor", 0x0062c3b3, 0x4118af4d, 0x7fffffff, 0x3ee750b2),
    ("xor", 0x0062c3b3, 0x00000002, 0x6b7414a0, 0x6b7414a2),
    ("xor", 0x0062c3b3, 0xd27122a4, 0x5d926511, 0x8fe347b5),
    ("xor", 0x0062c3b3, 0x5144df65, 0xa9603fa4, 0xf824e0c1),
    ("xor", 0x0062c3b3, 0x89064047, 0xfffffffe, 0x76f9bfb9),
    ("xor", 0x0062c3b3, 0x0be53031, 0x670da20c, 0x6ce8923d),
    ("xor", 0x0062c3b3, 0x00000000, 0x7faccc6d, 0x7faccc6d),
    ("xor", 0x0062c3b3, 0x00c9facf, 0x15aad84c, 0x15632283),
    ("xor", 0x0062c3b3, 0xfffffffe, 0x9aa06a56, 0x655f95a8),
    ("xor", 0x0062c3b3, 0xe553ef50, 0x41f356e2, 0xa4a0b9b2),
    ("xor", 0x0062c3b3, 0xc74203af, 0x907c5eb3, 0x573e5d1c),
    ("xor", 0x0062c3b3, 0xa8281286, 0xfffffffe, 0x57d7ed78),
    ("xor", 0x0062c3b3, 0x121a8aac, 0x80410ef7, 0x925b845b),
    ("xor", 0x0062c3b3, 0x00000001, 0xd7b22991, 0xd7b22990),
    ("xor", 0x0062c3b3, 0x6446b2ed, 0x9109eb6a, 0xf54f5987),
    ("xor", 0x0062c3b3, 0x00000002, 0x09bf716b, 0x09bf7169),
    ("xor", 0x0062c3b3, 0x3191e524, 0x1b792d38, 0x2ae8c81c),
    ("xor", 0x0062c3b3, 0x7fffffff, 0x06c0c035, 0x793f3fca),
    ("xor", 0x0062c3b3, 0xfffffffe, 0x00000020, 0xffffffde),
    ("xor", 0x0062c3b3, 0xffde7c92, 0x00000020, 0xffde7cb2),
    ("xor", 0x0062c3b3, 0x5c18a3ce, 0xab542552, 0xf74c869c),
    ("xor", 0x0062c3b3, 0x1197814a, 0x4fe0780f, 0x5e77f945),
    ("xor", 0x0062c3b3, 0x00000002, 0xd3294f4a, 0xd3294f48),
    ("xor", 0x0062c3b3, 0x00000001, 0xa764db1e, 0xa764db1f),
    ("xor", 0x0062c3b3, 0x12345678, 0x0000001f, 0x12345667),
    ("xor", 0x0062c3b3, 0x80000000, 0x1e19b8c1, 0x9e19b8c1),
    ("xor", 0x0062c3b3, 0x0000001f, 0x22ac8fcc, 0x22ac8fd3),
    ("xor", 0x0062c3b3, 0x00000001, 0xec05a7c8, 0xec05a7c9),
    ("srl", 0x0062d3b3, 0xfad23ebb, 0x9a78890b, 0x001f5a47),
    ("srl", 0x0062d3b3, 0xfffffffe, 0x386908c6, 0x03ffffff),
    ("srl", 0x0062d3b3, 0x7fffffff, 0x2dd35636, 0x000001ff),
    ("srl", 0x0062d3b3, 0x00000020, 0xd092de30, 0x00000000),
    ("srl", 0x0062d3b3, 0xfffffffe, 0xe8ecb05d, 0x00000007),
    ("srl", 0x0062d3b3, 0x2b763eb1, 0x12345678, 0x0000002b),
    ("srl", 0x0062d3b3, 0xfffffffe, 0x09c2cc45, 0x07ffffff),
    ("srl", 0x0062d3b3, 0xc1c18618, 0x80000000, 0xc1c18618),
    ("srl", 0x0062d3b3, 0x00000002, 0x7fffffff, 0x00000000),
    ("srl", 0x0062d3b3, 0x12345678, 0xea75d153, 0x00000246),
    ("srl", 0x0062d3b3, 0x00000020, 0x80000000, 0x00000020),
    ("srl", 0x0062d3b3, 0x0000001f, 0xf125fa93, 0x00000000),
    ("srl", 0x0062d3b3, 0x904b776f, 0xdc334665, 0x04825bbb),
    ("srl", 0x0062d3b3, 0x627b08e5, 0xb443c649, 0x00313d84),
    ("srl", 0x0062d3b3, 0x7fffffff, 0x160aa1c1, 0x3fffffff),
    ("srl", 0x0062d3b3, 0xffb88caa, 0xffffffff, 0x00000001),
    ("srl", 0x0062d3b3, 0xe8cafb0f, 0x00000020, 0xe8cafb0f),
    ("srl", 0x0062d3b3, 0xf9304fa6, 0xfffffffe, 0x00000003),
    ("srl", 0x0062d3b3, 0x50dcb2df, 0x22a4b972, 0x00001437),
    ("srl", 0x0062d3b3, 0xbbd4f620, 0x0000001f, 0x00000001),
    ("srl", 0x0062d3b3, 0x99ba84db, 0xc0544b8b, 0x00133750),
    ("srl", 0x0062d3b3, 0x2ee7a6cc, 0x29db99d6, 0x000000bb),
    ("srl", 0x0062d3b3, 0xb019a386, 0x00000000, 0xb019a386),
    ("srl", 0x0062d3b3, 0xa16a1451, 0x80000000, 0xa16a1451),
    ("srl", 0x0062d3b3, 0xfa54cd8a, 0x7cb569b5, 0x000007d2),
    ("srl", 0x0062d3b3, 0xda2ffe82, 0x00000021, 0x6d17ff41),
    ("srl", 0x0062d3b3, 0x2b3df0e8, 0x7a6aed02, 0x0acf7c3a),
    ("srl", 0x0062d3b3, 0x4bb4dde3, 0x3dc5c221, 0x25da6ef1),
    ("srl", 0x0062d3b3, 0x80000000, 0x6286eae0, 0x80000000),
    ("srl", 0x0062d3b3, 0x00000002, 0x00000021, 0x00000001),
    ("srl", 0x0062d3b3, 0x28e93dbf, 0x0fe31c84, 0x028e93db),
    ("srl", 0x0062d3b3, 0x97411ef3, 0xffffffff, 0x00000001),
    ("srl", 0x0062d3b3, 0xbe123bfd, 0xeab4f296, 0x000002f8),
    ("srl", 0x0062d3b3, 0xe37d6ccf, 0xa8048a3c, 0x0000000e),
    ("srl", 0x0062d3b3, 0x0000001f, 0x80000000, 0x0000001f),
    ("srl", 0x0062d3b3, 0x8274bc4a, 0x540d5a7b, 0x00000010),
    ("srl", 0x0062d3b3, 0x56ae8c84, 0xde5ab482, 0x15aba321),
    ("srl", 0x0062d3b3, 0x9c2f68da, 0xa0f6469a, 0x00000027),
    ("srl", 0x0062d3b3, 0x41d1e64b, 0x00000001, 0x20e8f325),
    ("srl", 0x0062d3b3, 0x00e7313e, 0x00000002, 0x0039cc4f),
    ("sra", 0x4062d3b3, 0xd904c87c, 0x768faadd, 0xfffffffe),
    ("sra", 0x4062d3b3, 0xe111835a, 0xb2fd9d69, 0xfff088c1),
    ("sra", 0x4062d3b3, 0x31ad4d85, 0xd97a530b, 0x000635a9),
    ("sra", 0x4062d3b3, 0x1d2e2b82, 0x05a4979f, 0x00000000),
    ("sra", 0x4062d3b3, 0x2ead98e4, 0x80000000, 0x2ead98e4),
    ("sra", 0x4062d3b3, 0x55149b93, 0x0000001f, 0x00000000),
    ("sra", 0x4062d3b3, 0x590a71e4, 0xffffffff, 0x00000000),
    ("sra", 0x4062d3b3, 0x7fffffff, 0x8813c477, 0x000000ff),
    ("sra", 0x4062d3b3, 0x0000001f, 0x12345678, 0x00000000),
    ("sra", 0x4062d3b3, 0xeff63b5e, 0xee8afa79, 0xfffffff7),
    ("sra", 0x4062d3b3, 0xd1027c98, 0x7110d72f, 0xffffa204),
    ("sra", 0x4062d3b3, 0x12b33d9a, 0x00000001, 0x09599ecd),
    ("sra", 0x4062d3b3, 0x92a164b0, 0x00000002, 0xe4a8592c),
    ("sra", 0x4062d3b3, 0x0000001f, 0x77e62521, 0x0000000f),
    ("sra", 0x4062d3b3, 0x80000000, 0xb6da97f1, 0xffffc000),
    ("sra", 0x4062d3b3, 0x2fc5bee7, 0x930c2231, 0x000017e2),
    ("sra", 0x4062d3b3, 0xb75af36f, 0x41270ba7, 0xff6eb5e6),
    ("sra", 0x4062d3b3, 0xfffffffe, 0x233a08aa, 0xffffffff),
    ("sra", 0x4062d3b3, 0xffffffff, 0xffffffff, 0xffffffff),
    ("sra", 0x4062d3b3, 0xacb36ebc, 0x7fffffff, 0xffffffff),
    ("sra", 0x4062d3b3, 0x7aebf9cc, 0x2224d281, 0x3d75fce6),
    ("sra", 0x4062d3b3, 0xb470674b, 0x039a9e56, 0xfffffed1),
    ("sra", 0x4062d3b3, 0x97d9a6e8, 0x7a413853, 0xfffff2fb),
    ("sra", 0x4062d3b3, 0x0000001f, 0x0000001f, 0x00000000),
    ("sra", 0x4062d3b3, 0x01df6b6e, 0xfffffffe, 0x00000000),
    ("sra", 0x4062d3b3, 0x00000021, 0x550bb543, 0x00000004),
    ("sra", 0x4062d3b3, 0xffffffff, 0xffffffff, 0xffffffff),
    ("sra", 0x4062d3b3, 0x341d0e00, 0x0914869c, 0x00000003),
    ("sra", 0x4062d3b3, 0xb91f07e9, 0xd6ea7614, 0xfffffb91),
    ("sra", 0x4062d3b3, 0xfd09fb45, 0xaa0de35c, 0xffffffff),
    ("sra", 0x4062d3b3, 0x80000000, 0x00000001, 0xc0000000),
    ("sra", 0x4062d3b3, 0x421ced3f, 0x00000021, 0x210e769f),
    ("sra", 0x4062d3b3, 0x00000020, 0xffffffff, 0x00000000),
    ("sra", 0x4062d3b3, 0x8472e7aa, 0x8b100580, 0x8472e7aa),
    ("sra", 0x4062d3b3, 0x3e6e1a93, 0x7024d80c, 0x0003e6e1),
    ("sra", 0x4062d3b3, 0x7fffffff, 0xffffffff, 0x00000000),
    ("sra", 0x4062d3b3, 0x00000021, 0x00000020, 0x00000021),
    ("sra", 0x4062d3b3, 0x0000001f, 0x80000000, 0x0000001f),
    ("sra", 0x4062d3b3, 0x011ef679, 0x1639f0a3, 0x0023decf),
    ("sra", 0x4062d3b3, 0x00000000, 0x80000000, 0x00000000),
    ("or", 0x0062e3b3, 0x7c60c46c, 0xe3298b2c, 0xff69cf6c),
    ("or", 0x0062e3b3, 0xd8068866, 0x00000020, 0xd8068866),
    ("or", 0x0062e3b3, 0xcc7be204, 0x80000000, 0xcc7be204),
    ("or", 0x0062e3b3, 0x12345678, 0x07d2e9ef, 0x17f6ffff),
    ("or", 0x0062e3b3, 0x393b0b10, 0x12345678, 0x3b3f5f78),
    ("or", 0x0062e3b3, 0x0000001f, 0x4c5620fc, 0x4c5620ff),
    ("or", 0x0062e3b3, 0xc1de78a8, 0x8a4e0bba, 0xcbde7bba),
    ("or", 0x0062e3b3, 0x00000020, 0x7606d4f2, 0x7606d4f2),
    ("or", 0x0062e3b3, 0x0000001f, 0x4507051d, 0x4507051f),
    ("or", 0x0062e3b3, 0xc1008268, 0xf4ab95e2, 0xf5ab97ea),
    ("or", 0x0062e3b3, 0xffffffff, 0x0000001f, 0xffffffff),
    ("or", 0x0062e3b3, 0x1a966531, 0x3a2ea7b8, 0x3abee7b9),
    ("or", 0x0062e3b3, 0x00000000, 0xa5a80ae6, 0xa5a80ae6),
    ("or", 0x0062e3b3, 0x00000020, 0xff966104, 0xff966124),
    ("or", 0x0062e3b3, 0x00000021, 0x362c0d1d, 0x362c0d3d),
    ("or", 0x0062e3b3, 0x99fb4396, 0x810641f5, 0x99ff43f7),
    ("or", 0x0062e3b3, 0x7fffffff, 0xba1b5f80, 0xffffffff),
    ("or", 0x0062e3b3, 0x792027fa, 0x7fffffff, 0x7fffffff),
    ("or", 0x0062e3b3, 0x1d61523d, 0x0f43816d, 0x1f63d37d),
    ("or", 0x0062e3b3, 0x29755e2d, 0x02a4ed6b, 0x2bf5ff6f),
    ("or", 0x0062e3b3, 0xffffffff, 0x91e8e341, 0xffffffff),
    ("or", 0x0062e3b3, 0x0f182541, 0x0cf842c3, 0x0ff867c3),
    ("or", 0x0062e3b3, 0x60fee67f, 0x81a2efc6, 0xe1feefff),
    ("or", 0x0062e3b3, 0xccc179d2, 0x34a3abd1, 0xfce3fbd3),
    ("or", 0x0062e3b3, 0x5aefaaa5, 0x2351e798, 0x7bffefbd),
    ("or", 0x0062e3b3, 0x6866b507, 0x52be66b0, 0x7afef7b7),
    ("or", 0x0062e3b3, 0x0f56f8e4, 0x00000021, 0x0f56f8e5),
    ("or", 0x0062e3b3, 0xd146e15b, 0x00000000, 0xd146e15b),
    ("or", 0x0062e3b3, 0x4a9afcce, 0x4af50f9f, 0x4affffdf),
    ("or", 0x0062e3b3, 0x658f8289, 0x00000001, 0x658f8289),
    ("or", 0x0062e3b3, 0x9cb15d45, 0x00000020, 0x9cb15d65),
    ("or", 0x0062e3b3, 0xfc973376, 0x80000000, 0xfc973376),
    ("or", 0x0062e3b3, 0x1d9abfd2, 0xc71dab7a, 0xdf9fbffa),
    ("or", 0x0062e3b3, 0xf556bc3d, 0x28e545bd, 0xfdf7fdbd),
    ("or", 0x0062e3b3, 0x00000020, 0x0f13696c, 0x0f13696c),
    ("or", 0x0062e3b3, 0x2a65e7fa, 0x0000001f, 0x2a65e7ff),
    ("or", 0x0062e3b3, 0x7178e08b, 0x00000001, 0x7178e08b),
    ("or", 0x0062e3b3, 0x6d74ee44, 0xedf7b7cf, 0xedf7ffcf),
    ("or", 0x0062e3b3, 0x27e7c970, 0x3df45956, 0x3ff7d976),
    ("or", 0x0062e3b3, 0x79e62be8, 0x00000002, 0x79e62bea),
    ("and", 0x0062f3b3, 0x572c7683, 0x5ee7dd5e, 0x56245402),
    ("and", 0x0062f3b3, 0x26f6e409, 0x00000021, 0x00000001),
    ("and", 0x0062f3b3, 0xcfa44897, 0x0cbb0e19, 0x0ca00811),
    ("and", 0x0062f3b3, 0x9538ece8, 0xc2b9e8bb, 0x8038e8a8),
    ("and", 0x0062f3b3, 0x76074fa6, 0x5172b04f, 0x50020006),
    ("and", 0x0062f3b3, 0x1a264bc8, 0x0000001f, 0x00000008),
    ("and", 0x0062f3b3, 0x1bd5e230, 0xd2062399, 0x12042210),
    ("and", 0x0062f3b3, 0x3c2f1039, 0x00000000, 0x00000000),
    ("and", 0x0062f3b3, 0xbeda7c1b, 0x0ddb4284, 0x0cda4000),
    ("and", 0x0062f3b3, 0xffffffff, 0x12345678, 0x12345678),
    ("and", 0x0062f3b3, 0x25ca8cd4, 0x00000002, 0x00000000),
    ("and", 0x0062f3b3, 0x072a85ee, 0x80000000, 0x00000000),
    ("and", 0x0062f3b3, 0x4bd82229, 0x00000001, 0x00000001),
    ("and", 0x0062f3b3, 0x00000021, 0x5591d4b1, 0x00000021),
    ("and", 0x0062f3b3, 0x884b6555, 0x341bdbe9, 0x000b4141),
    ("and", 0x0062f3b3, 0xaf2848cb, 0x00000021, 0x00000001),
    ("and", 0x0062f3b3, 0x469b0b11, 0x0000001f, 0x00000011),
    ("and", 0x0062f3b3, 0x503326fd, 0x3548bab2, 0x100022b0),
    ("and", 0x0062f3b3, 0x00000001, 0x911400dd, 0x00000001),
    ("and", 0x0062f3b3, 0x20e019f7, 0xd7679515, 0x00601115),
    ("and", 0x0062f3b3, 0xb6edf8f8, 0xfffffffe, 0xb6edf8f8),
    ("and", 0x0062f3b3, 0xf70570fa, 0x00000001, 0x00000000),
    ("and", 0x0062f3b3, 0x35e666bd, 0x16a2a11a, 0x14a22018),
    ("and", 0x0062f3b3, 0x2ac16ff3, 0x0000001f, 0x00000013),
    ("and", 0x0062f3b3, 0xfa864e09, 0xea8517ac, 0xea840608),
    ("and", 0x0062f3b3, 0x0000001f, 0x0f254311, 0x00000011),
    ("and", 0x0062f3b3, 0x00000002, 0x7fffffff, 0x00000002),
    ("and", 0x0062f3b3, 0x2b7bcff9, 0x5050bee9, 0x00508ee9),
    ("and", 0x0062f3b3, 0x38537d1f, 0xa4a97a87, 0x20017807),
    ("and", 0x0062f3b3, 0x99b35516, 0x6cd2ebfa, 0x08924112),
    ("and", 0x0062f3b3, 0xca4d14f8, 0x1e696746, 0x0a490440),
    ("and", 0x0062f3b3, 0x00000021, 0xf6a8a6c3, 0x00000001),
    ("and", 0x0062f3b3, 0x76efc723, 0x00000021, 0x00000021),
    ("and", 0x0062f3b3, 0x7d7f73d9, 0x0000001f, 0x00000019),
    ("and", 0x0062f3b3, 0x12345678, 0x12345678, 0x12345678),
    ("and", 0x0062f3b3, 0x4d0f00f5, 0x694e818d, 0x490e0085),
    ("and", 0x0062f3b3, 0xd5fd05cd, 0x48efd276, 0x40ed0044),
    ("and", 0x0062f3b3, 0x7fffffff, 0x99ce9917, 0x19ce9917),
    ("and", 0x0062f3b3, 0x7fffffff, 0x00000002, 0x00000002),
    ("and", 0x0062f3b3, 0x16f8dc61, 0x41cd352c, 0x00c81420),
    ("mul", 0x026283b3, 0x00000021, 0x232dea6f, 0x88eb384f),
    ("mul", 0x026283b3, 0x917531ef, 0x6fa06ab9, 0x7abe0bb7),
    ("mul", 0x026283b3, 0x268d3398, 0x098a1549, 0xbb6f2e58),
    ("mul", 0x026283b3, 0xc46df8b2, 0xc264d7ad, 0x23b68e4a),
    ("mul", 0x026283b3, 0xfffffffe, 0x00000000, 0x00000000),
    ("mul", 0x026283b3, 0x377d8258, 0x86c29796, 0x621c4790),
    ("mul", 0x026283b3, 0x00000021, 0xc5d1ab93, 0x80071df3),
    ("mul", 0x026283b3, 0x8df94296, 0x37bb0927, 0x41e26ada),
    ("mul", 0x026283b3, 0x35510b51, 0x12345678, 0x363e83f8),
    ("mul", 0x026283b3, 0x80000000, 0xaf08e05c, 0x00000000),
    ("mul", 0x026283b3, 0x00000002, 0x5f944aea, 0xbf2895d4),
    ("mul", 0x026283b3, 0x516a7715, 0x0000001f, 0xdbe46b8b),
    ("mul", 0x026283b3, 0x067ec4d7, 0xd596acfb, 0xc38572cd),
    ("mul", 0x026283b3, 0x00000000, 0x9240a158, 0x00000000),
    ("mul", 0x026283b3, 0x28ba4c6d, 0xf7e7aa2d, 0x00dad129),
    ("mul", 0x026283b3, 0x71e40b94, 0xc792e020, 0x6d0af280),
    ("mul", 0x026283b3, 0xed344d9a, 0x251e971e, 0xfff2ee0c),
    ("mul", 0x026283b3, 0x82368a14, 0x6fdb270e, 0x39209918),
    ("mul", 0x026283b3, 0xffffffff, 0x80000000, 0x80000000),
    ("mul", 0x026283b3, 0x438b5e64, 0xffffffff, 0xbc74a19c),
    ("mul", 0x026283b3, 0xd49b94a7, 0x00000000, 0x00000000),
    ("mul", 0x026283b3, 0x5c944570, 0x9e4e49ab, 0x66f751d0),
    ("mul", 0x026283b3, 0xb2ecbe43, 0x8a184351, 0x86fbbc33),
    ("mul", 0x026283b3, 0x00000002, 0xbbed3ef1, 0x77da7de2),
    ("mul", 0x026283b3, 0x14c34f37, 0x1848a039, 0x2077033f),
    ("mul", 0x026283b3, 0x13e2f9b4, 0x9eae4395, 0xcacd71c4),
    ("mul", 0x026283b3, 0x008e0709, 0xffffffff, 0xff71f8f7),
    ("mul", 0x026283b3, 0x71b0e886, 0x12345678, 0x604202d0),
    ("mul", 0x026283b3, 0x00000000, 0x56f74f86, 0x00000000),
    ("mul", 0x026283b3, 0x2a10ddd4, 0xa027e2a6, 0x7610ff78),
    ("mul", 0x026283b3, 0x52d57bf1, 0xd22f60d1, 0x22038fc1),
    ("mul", 0x026283b3, 0x102fd554, 0xa1ef9088, 0x7ed494a0),
    ("mul", 0x026283b3, 0x72a956b3, 0xfffffffe, 0x1aad529a),
    ("mul", 0x026283b3, 0x12345678, 0xa028be5c, 0xe5bc2320),
    ("mul", 0x026283b3, 0xeb02d9a3, 0x2aeff2c9, 0x2425f6fb),
    ("mul", 0x026283b3, 0x00ed24d8, 0xb63a3e8a, 0xd7b22c70),
    ("mul", 0x026283b3, 0x00000000, 0x54e8adf5, 0x00000000),
    ("mul", 0x026283b3, 0x00000021, 0x8c061840, 0x0cc92040),
    ("mul", 0x026283b3, 0xedda359b, 0x8715ffa2, 0x02325116),
    ("mul", 0x026283b3, 0x00000021, 0x00000000, 0x00000000),
    ("mulh", 0x026293b3, 0xaa66f303, 0xfffffffe, 0x00000000),
    ("mulh", 0x026293b3, 0xcea78d51, 0x00000000, 0x00000000),
    ("mulh", 0x026293b3, 0x93187673, 0x00000000, 0x00000000),
    ("mulh", 0x026293b3, 0xfea99531, 0x0000001f, 0xffffffff),
    ("mulh", 0x026293b3, 0x2c455d68, 0x01557c84, 0x003b0ded),
    ("mulh", 0x026293b3, 0x0b2f4688, 0xf7b8ae27, 0xffa3681b),
    ("mulh", 0x026293b3, 0xed3a1d0f, 0x42d233ba, 0xfb19915e),
    ("mulh", 0x026293b3, 0x47789cc0, 0xfffffffe, 0xffffffff),
    ("mulh", 0x026293b3, 0x80000000, 0xfa2553a3, 0x02ed562e),
    ("mulh", 0x026293b3, 0x9ff19f15, 0x0644e833, 0xfda5cec8),
    ("mulh", 0x026293b3, 0x51ad45b0, 0x181f6316, 0x07b24220),
    ("mulh", 0x026293b3, 0xffffffff, 0xe2b5bc2b, 0x00000000),
    ("mulh", 0x026293b3, 0x00000020, 0xc4a20614, 0xfffffff8),
    ("mulh", 0x026293b3, 0x0000001f, 0x19769c9c, 0x00000003),
    ("mulh", 0x026293b3, 0x34b6cd9b, 0x00000000, 0x00000000),
    ("mulh", 0x026293b3, 0x1cbc4fed, 0x751abd0f, 0x0d2510e0),
    ("mulh", 0x026293b3, 0x0000001f, 0xfffffffe, 0xffffffff),
    ("mulh", 0x026293b3, 0x00000001, 0x5bfe19c3, 0x00000000),
    ("mulh", 0x026293b3, 0x00000000, 0xadf19f53, 0x00000000),
    ("mulh", 0x026293b3, 0x8490456a, 0x7fffffff, 0xc24822b5),
    ("mulh", 0x026293b3, 0xe9f92838, 0xa94190d3, 0x0776af22),
    ("mulh", 0x026293b3, 0xce23a60c, 0x2deedbdc, 0xf70dbe82),
    ("mulh", 0x026293b3, 0xb3066e74, 0x00000001, 0xffffffff),
    ("mulh", 0x026293b3, 0xd5774661, 0xe05487c4, 0x05430bc8),
    ("mulh", 0x026293b3, 0x80000000, 0x357c64da, 0xe541cd93),
    ("mulh", 0x026293b3, 0xe9b117fa, 0x36c9f18c, 0xfb39c20e),
    ("mulh", 0x026293b3, 0x0449cf15, 0x0000001f, 0x00000000),
    ("mulh", 0x026293b3, 0x42bb042c, 0x91310356, 0xe31dafdb),
    ("mulh", 0x026293b3, 0x3702aabb, 0x30e51f02, 0x0a81bc0f),
    ("mulh", 0x026293b3, 0xbdfc8fda, 0xffffffff, 0x00000000),
    ("mulh", 0x026293b3, 0x690acbfe, 0xab97ce0e, 0xdd5db42f),
    ("mulh", 0x026293b3, 0x8877bec4, 0xffffffff, 0x00000000),
    ("mulh", 0x026293b3, 0x634c5817, 0x0f270d5d, 0x05e09ef9),
    ("mulh", 0x026293b3, 0xcfc41d07, 0x85483882, 0x171f2a90),
    ("mulh", 0x026293b3, 0x21e0210f, 0x7fffffff, 0x10f01087),
    ("mulh", 0x026293b3, 0xfffffffe, 0x5f1dcc9a, 0xffffffff),
    ("mulh", 0x026293b3, 0x00000021, 0xc5549bfc, 0xfffffff8),
    ("mulh", 0x026293b3, 0x8baaadf8, 0x175b5dd9, 0xf562d0a7),
    ("mulh", 0x026293b3, 0x4623bf1b, 0x0000001f, 0x00000008),
    ("mulh", 0x026293b3, 0x79fdcfe1, 0xffffffff, 0xffffffff),
    ("mulhsu", 0x0262a3b3, 0xec5ce3b7, 0x00000020, 0xfffffffd),
    ("mulhsu", 0x0262a3b3, 0xc260638e, 0x00000002, 0xffffffff),
    ("mulhsu", 0x0262a3b3, 0xffffffff, 0x9ace73d2, 0xffffffff),
    ("mulhsu", 0x0262a3b3, 0xb4fec14d, 0x5a3abdf4, 0xe5905a05),
    ("mulhsu", 0x0262a3b3, 0x7fffffff, 0x9b061631, 0x4d830b17),
    ("mulhsu", 0x0262a3b3, 0xfffffffe, 0x98d6997c, 0xfffffffe),
    ("mulhsu", 0x0262a3b3, 0x115c5994, 0x42eebfff, 0x0489fff8),
    ("mulhsu", 0x0262a3b3, 0xa1cdf5e8, 0xef3a24bf, 0xa7f9e3b7),
    ("mulhsu", 0x0262a3b3, 0x2b917039, 0x47dfc9ba, 0x0c3b6c25),
    ("mulhsu", 0x0262a3b3, 0xaba4cabe, 0xfb2971f0, 0xad3ceaa1),
    ("mulhsu", 0x0262a3b3, 0x00000021, 0xfc085d74, 0x00000020),
    ("mulhsu", 0x0262a3b3, 0x819e309d, 0xffffffff, 0x819e309d),
    ("mulhsu", 0x0262a3b3, 0x0eb7fe0c, 0x88cfe536, 0x07ddb2ea),
    ("mulhsu", 0x0262a3b3, 0x00000021, 0xffffffff, 0x00000020),
    ("mulhsu", 0x0262a3b3, 0x53110b6d, 0x3fa975bc, 0x14a82e44),
    ("mulhsu", 0x0262a3b3, 0x00000021, 0x7fffffff, 0x00000010),
    ("mulhsu", 0x0262a3b3, 0x00000001, 0x00000020, 0x00000000),
    ("mulhsu", 0x0262a3b3, 0x869f50e9, 0xd22051b1, 0x9c5f5d8d),
    ("mulhsu", 0x0262a3b3, 0x00000002, 0x1e9e7d2b, 0x00000000),
    ("mulhsu", 0x0262a3b3, 0x00000000, 0xd7aa218d, 0x00000000),
    ("mulhsu", 0x0262a3b3, 0xfffffffe, 0xb86f0ece, 0xfffffffe),
    ("mulhsu", 0x0262a3b3, 0x12345678, 0x00000000, 0x00000000),
    ("mulhsu", 0x0262a3b3, 0x80000000, 0xfda608ac, 0x812cfbaa),
    ("mulhsu", 0x0262a3b3, 0xbe883d89, 0xaff08b72, 0xd3019e21),
    ("mulhsu", 0x0262a3b3, 0x80000000, 0x09349446, 0xfb65b5dd),
    ("mulhsu", 0x0262a3b3, 0x77f73221, 0xc2189c04, 0x5af4dc46),
    ("mulhsu", 0x0262a3b3, 0xffffffff, 0xe19a7fff, 0xffffffff),
    ("mulhsu", 0x0262a3b3, 0x12345678, 0x8ee605b2, 0x0a296363),
    ("mulhsu", 0x0262a3b3, 0x5dcc53d9, 0x3f655506, 0x173a6966),
    ("mulhsu", 0x0262a3b3, 0x131e8b34, 0xa64d8d76, 0x0c6b9904),
    ("mulhsu", 0x0262a3b3, 0xf371b1a7, 0x806d5cec, 0xf9b37bad),
    ("mulhsu", 0x0262a3b3, 0x00000001, 0x0000001f, 0x00000000),
    ("mulhsu", 0x0262a3b3, 0xad357798, 0xf8a92510, 0xaf95182a),
    ("mulhsu", 0x0262a3b3, 0xda4f8fe0, 0x01e7142b, 0xffb84a62),
    ("mulhsu", 0x0262a3b3, 0x4e6243be, 0xffffffff, 0x4e6243bd),
    ("mulhsu", 0x0262a3b3, 0x0000001f, 0x7b70ccde, 0x0000000e),
    ("mulhsu", 0x0262a3b3, 0x22bcc6c0, 0x12345678, 0x0278600d),
    ("mulhsu", 0x0262a3b3, 0xf532e511, 0x00000021, 0xfffffffe),
    ("mulhsu", 0x0262a3b3, 0x42bad532, 0x00000020, 0x00000008),
    ("mulhsu", 0x0262a3b3, 0x00000001, 0x50049a84, 0x00000000),
    ("mulhu", 0x0262b3b3, 0xaf035ca1, 0xe7362558, 0x9e110cd2),
    ("mulhu", 0x0262b3b3, 0xe6791fca, 0x9bdbd318, 0x8c513de8),
    ("mulhu", 0x0262b3b3, 0x00000021, 0x12345678, 0x00000002),
    ("mulhu", 0x0262b3b3, 0x0000001f, 0x00000020, 0x00000000),
    ("mulhu", 0x0262b3b3, 0xb0902e52, 0xf90b0eeb, 0xabc3dd89),
    ("mulhu", 0x0262b3b3, 0xecab4cc1, 0xaee60ba1, 0xa1b11ad2),
    ("mulhu", 0x0262b3b3, 0xa9f2e010, 0x2e223d6a, 0x1ea05f49),
    ("mulhu", 0x0262b3b3, 0xa8aa0578, 0xdf82f301, 0x93426134),
    ("mulhu", 0x0262b3b3, 0xc3ce2bf0, 0xffffffff, 0xc3ce2bef),
    ("mulhu", 0x0262b3b3, 0x16b48bf7, 0x2996531a, 0x03b03f93),
    ("mulhu", 0x0262b3b3, 0x1c995aa6, 0x80000000, 0x0e4cad53),
    ("mulhu", 0x0262b3b3, 0x00000002, 0x00000020, 0x00000000),
    ("mulhu", 0x0262b3b3, 0x3e8d4f7f, 0x698503c5, 0x19c875f1),
    ("mulhu", 0x0262b3b3, 0x12345678, 0x60c2bd7f, 0x06e17990),
    ("mulhu", 0x0262b3b3, 0x00000021, 0xf44d1c8d, 0x0000001f),
    ("mulhu", 0x0262b3b3, 0xc9194b7a, 0xcde4475a, 0xa1bc9404),
    ("mulhu", 0x0262b3b3, 0x3a23ecb4, 0x6ebcb1ae, 0x19264a71),
    ("mulhu", 0x0262b3b3, 0x333097dc, 0x6242021d, 0x13a5cd15),
    ("mulhu", 0x0262b3b3, 0xbb05e1da, 0x12345678, 0x0d4ca63e),
    ("mulhu", 0x0262b3b3, 0xfffffffe, 0x12a26880, 0x12a2687f),
    ("mulhu", 0x0262b3b3, 0xb62865c8, 0x80000000, 0x5b1432e4),
    ("mulhu", 0x0262b3b3, 0xf6ac6140, 0x85b5c62a, 0x80d6b558),
    ("mulhu", 0x0262b3b3, 0xd4c53792, 0x38c83130, 0x2f31871c),
    ("mulhu", 0x0262b3b3, 0x8d0f70a7, 0x00000020, 0x00000011),
    ("mulhu", 0x0262b3b3, 0xfffffffe, 0x00000001, 0x00000000),
    ("mulhu", 0x0262b3b3, 0x178a3eb1, 0x00000021, 0x00000003),
    ("mulhu", 0x0262b3b3, 0xa1a5d4c0, 0x0000001f, 0x00000013),
    ("mulhu", 0x0262b3b3, 0x00000020, 0x9748a5c4, 0x00000012),
    ("mulhu", 0x0262b3b3, 0x7f19d5e8, 0x00000002, 0x00000000),
    ("mulhu", 0x0262b3b3, 0x80b4bd6c, 0x84d3aecd, 0x42c79e85),
    ("mulhu", 0x0262b3b3, 0xb3c4ebca, 0x00000021, 0x00000017),
    ("mulhu", 0x0262b3b3, 0x0b1015f7, 0x80780c50, 0x058d3b0e),
    ("mulhu", 0x0262b3b3, 0xfa503781, 0x102b8ee2, 0x0fcf9aa6),
    ("mulhu", 0x0262b3b3, 0xc0fc40cb, 0x5eb72927, 0x4766b322),
    ("mulhu", 0x0262b3b3, 0xa846241f, 0x02f0218d, 0x01ee6417),
    ("mulhu", 0x0262b3b3, 0x0000001f, 0xffffffff, 0x0000001e),
    ("mulhu", 0x0262b3b3, 0xfd901a87, 0x032c7c89, 0x0324c06d),
    ("mulhu", 0x0262b3b3, 0xef3182ea, 0xd21fa3a7, 0xc4542d4b),
    ("mulhu", 0x0262b3b3, 0x36280041, 0x01c7440a, 0x00604f7d),
    ("mulhu", 0x0262b3b3, 0xc1414c1c, 0xaf4a7a87, 0x8453dc66),
    ("div", 0x0262c3b3, 0x00000002, 0xa76e718f, 0x00000000),
    ("div", 0x0262c3b3, 0x190cb3af, 0xfffffffe, 0xf379a629),
    ("div", 0x0262c3b3, 0xb78be495, 0x033b2ff6, 0xffffffea),
    ("div", 0x0262c3b3, 0x078e398a, 0x40369aaf, 0x00000000),
    ("div", 0x0262c3b3, 0x19866244, 0x12345678, 0x00000001),
    ("div", 0x0262c3b3, 0xf89d5048, 0xb3c22a95, 0x00000000),
    ("div", 0x0262c3b3, 0xaf112b07, 0x6c80fd30, 0x00000000),
    ("div", 0x0262c3b3, 0x7ea5dc88, 0x00000021, 0x03d67b0b),
    ("div", 0x0262c3b3, 0x00000001, 0xeb0a4b44, 0x00000000),
    ("div", 0x0262c3b3, 0xfbc74b4b, 0x51d691ce, 0x00000000),
    ("div", 0x0262c3b3, 0xffffffff, 0x334c6d2a, 0x00000000),
    ("div", 0x0262c3b3, 0xe870ddf4, 0xfb344ce2, 0x00000004),
    ("div", 0x0262c3b3, 0x0000001f, 0xdecb18dd, 0x00000000),
    ("div", 0x0262c3b3, 0xa6a7bd14, 0xac2a5831, 0x00000001),
    ("div", 0x0262c3b3, 0x1ab267fd, 0x2b597b1b, 0x00000000),
    ("div", 0x0262c3b3, 0x7fffffff, 0x80000000, 0x00000000),
    ("div", 0x0262c3b3, 0x80000000, 0xf91b70e7, 0x00000012),
    ("div", 0x0262c3b3, 0x65c1d968, 0x239a2d96, 0x00000002),
    ("div", 0x0262c3b3, 0xb3584ac8, 0x362c8692, 0xffffffff),
    ("div", 0x0262c3b3, 0xfffffffe, 0xade57d10, 0x00000000),
    ("div", 0x0262c3b3, 0x00000020, 0xc32c6b69, 0x00000000),
    ("div", 0x0262c3b3, 0xd91cacd6, 0xa86a3ce7, 0x00000000),
    ("div", 0x0262c3b3, 0x557ab513, 0xa13333fb, 0x00000000),
    ("div", 0x0262c3b3, 0xc1961592, 0x35ef0c57, 0xffffffff),
    ("div", 0x0262c3b3, 0xd44d5d4a, 0xd093375f, 0x00000000),
    ("div", 0x0262c3b3, 0xec369c24, 0x00000020, 0xff61b4e2),
    ("div", 0x0262c3b3, 0x0000001f, 0xe018f99f, 0x00000000),
    ("div", 0x0262c3b3, 0x355617e4, 0xd513518f, 0xffffffff),
    ("div", 0x0262c3b3, 0x2b185bef, 0x12345678, 0x00000002),
    ("div", 0x0262c3b3, 0xa803304a, 0x31a142c8, 0xffffffff),
    ("div", 0x0262c3b3, 0x64bbccaf, 0x041723b0, 0x00000018),
    ("div", 0x0262c3b3, 0x6454d990, 0x3b280ed7, 0x00000001),
    ("div", 0x0262c3b3, 0xae26fa21, 0x00000020, 0xfd7137d2),
    ("div", 0x0262c3b3, 0xffffffff, 0xe9f21dd7, 0x00000000),
    ("div", 0x0262c3b3, 0x7a8c7bb1, 0x7070aae0, 0x00000001),
    ("div", 0x0262c3b3, 0xf441c0e8, 0xfe3fed90, 0x00000006),
    ("div", 0x0262c3b3, 0xcdda2c70, 0x80000000, 0x00000000),
    ("div", 0x0262c3b3, 0x12345678, 0xb94591d6, 0x00000000),
    ("div", 0x0262c3b3, 0x30777d02, 0x57fcac3b, 0x00000000),
    ("div", 0x0262c3b3, 0x00000000, 0xf6c7fe13, 0x00000000),
    ("divu", 0x0262d3b3, 0x12345678, 0xb7c11700, 0x00000000),
    ("divu", 0x0262d3b3, 0x80000000, 0x00000020, 0x04000000),
    ("divu", 0x0262d3b3, 0xc9a0cf73, 0x849e9cde, 0x00000001),
    ("divu", 0x0262d3b3, 0x90087b6f, 0x12345678, 0x00000007),
    ("divu", 0x0262d3b3, 0x9a73972d, 0x683a495b, 0x00000001),
    ("divu", 0x0262d3b3, 0x0ab27170, 0x12345678, 0x00000000),
    ("divu", 0x0262d3b3, 0x9d8ac1a1, 0x0000001f, 0x0514fdfc),
    ("divu", 0x0262d3b3, 0xadbb47b4, 0x18bee3a0, 0x00000007),
    ("divu", 0x0262d3b3, 0x0000001f, 0x9201720d, 0x00000000),
    ("divu", 0x0262d3b3, 0x42d640de, 0xce4f2bb6, 0x00000000),
    ("divu", 0x0262d3b3, 0x48c8d166, 0x361d4655, 0x00000001),
    ("divu", 0x0262d3b3, 0xecd5b6ae, 0x00000020, 0x0766adb5),
    ("divu", 0x0262d3b3, 0x00000001, 0x442cdfe5, 0x00000000),
    ("divu", 0x0262d3b3, 0x00000020, 0x80000000, 0x00000000),
    ("divu", 0x0262d3b3, 0x1c99b558, 0x00000001, 0x1c99b558),
    ("divu", 0x0262d3b3, 0xb4dd1e6b, 0x58e78f10, 0x00000002),
    ("divu", 0x0262d3b3, 0xa0ec2d05, 0xd356b4ce, 0x00000000),
    ("divu", 0x0262d3b3, 0x00000020, 0x7fffffff, 0x00000000),
    ("divu", 0x0262d3b3, 0xd40184d3, 0x1427c4e1, 0x0000000a),
    ("divu", 0x0262d3b3, 0xbec4f629, 0x060297d6, 0x0000001f),
    ("divu", 0x0262d3b3, 0x7fffffff, 0x00000020, 0x03ffffff),
    ("divu", 0x0262d3b3, 0xffffffff, 0x6d50eaeb, 0x00000002),
    ("divu", 0x0262d3b3, 0xffffffff, 0x00000002, 0x7fffffff),
    ("divu", 0x0262d3b3, 0x927824f6, 0x089abd0f, 0x00000011),
    ("divu", 0x0262d3b3, 0xf45dbe7e, 0x7a38c751, 0x00000001),
    ("divu", 0x0262d3b3, 0xbf681ede, 0x9bc7f602, 0x00000001),
    ("divu", 0x0262d3b3, 0x00000021, 0x00000020, 0x00000001),
    ("divu", 0x0262d3b3, 0x57981b45, 0x5f820c94, 0x00000000),
    ("divu", 0x0262d3b3, 0xfffffffe, 0xffffffff, 0x00000000),
    ("divu", 0x0262d3b3, 0x7095525e, 0x00000020, 0x0384aa92),
    ("divu", 0x0262d3b3, 0x12345678, 0x7fffffff, 0x00000000),
    ("divu", 0x0262d3b3, 0xbbd88f44, 0x420ec637, 0x00000002),
    ("divu", 0x0262d3b3, 0x00000000, 0xb312af3a, 0x00000000),
    ("divu", 0x0262d3b3, 0xe51443b3, 0x1041484e, 0x0000000e),
    ("divu", 0x0262d3b3, 0xdb520eb9, 0xdd6bfa9c, 0x00000000),
    ("divu", 0x0262d3b3, 0x07187af0, 0x03fae0a7, 0x00000001),
    ("divu", 0x0262d3b3, 0xb39526c1, 0x1e120c80, 0x00000005),
    ("divu", 0x0262d3b3, 0x80000000, 0x00000001, 0x80000000),
    ("divu", 0x0262d3b3, 0x7180311a, 0x00000000, 0xffffffff),
    ("divu", 0x0262d3b3, 0x4e4cba53, 0x00cc5350, 0x00000062),
    ("rem", 0x0262e3b3, 0xb9549a65, 0xd890babb, 0xe0c3dfaa),
    ("rem", 0x0262e3b3, 0x027492cc, 0xd984e77c, 0x027492cc),
    ("rem", 0x0262e3b3, 0x80000000, 0x0000001f, 0xfffffffe),
    ("rem", 0x0262e3b3, 0xefe056eb, 0xe0774f10, 0xefe056eb),
    ("rem", 0x0262e3b3, 0x1366d05d, 0x7fffffff, 0x1366d05d),
    ("rem", 0x0262e3b3, 0x4767a126, 0xa1718829, 0x4767a126),
    ("rem", 0x0262e3b3, 0x0123dbf6, 0xfffffffe, 0x00000000),
    ("rem", 0x0262e3b3, 0xe7c68a64, 0x12345678, 0xf9fae0dc),
    ("rem", 0x0262e3b3, 0x2b10db85, 0x059b16c6, 0x03d33c1b),
    ("rem", 0x0262e3b3, 0xf2b20618, 0x80000000, 0xf2b20618),
    ("rem", 0x0262e3b3, 0x0000001f, 0xbbefaa5e, 0x0000001f),
    ("rem", 0x0262e3b3, 0xff0b9b36, 0x2e07e0de, 0xff0b9b36),
    ("rem", 0x0262e3b3, 0x00000002, 0x00000000, 0x00000002),
    ("rem", 0x0262e3b3, 0x00000000, 0xf6458776, 0x00000000),
    ("rem", 0x0262e3b3, 0x7fffffff, 0x5a395200, 0x25c6adff),
    ("rem", 0x0262e3b3, 0x00000020, 0x6aaa51b0, 0x00000020),
    ("rem", 0x0262e3b3, 0x288af212, 0x6a2c6187, 0x288af212),
    ("rem", 0x0262e3b3, 0xfffffffe, 0xfffffffe, 0x00000000),
    ("rem", 0x0262e3b3, 0x0000001f, 0x5805e58f, 0x0000001f),
    ("rem", 0x0262e3b3, 0x80000000, 0xffffffff, 0x00000000),
    ("rem", 0x0262e3b3, 0xc951e92b, 0xc0adf50d, 0xc951e92b),
    ("rem", 0x0262e3b3, 0x7bed5773, 0x826b8332, 0x7bed5773),
    ("rem", 0x0262e3b3, 0x8dda5b44, 0xe1515b26, 0xe9e649d2),
    ("rem", 0x0262e3b3, 0x3657d8fa, 0xa8f4195e, 0x3657d8fa),
    ("rem", 0x0262e3b3, 0x7fffffff, 0x73ed68f2, 0x0c12970d),
    ("rem", 0x0262e3b3, 0x4a0211ac, 0x488741bf, 0x017acfed),
    ("rem", 0x0262e3b3, 0x60edfb44, 0x3ba7dab0, 0x25462094),
    ("rem", 0x0262e3b3, 0x00000002, 0xda4e4eda, 0x00000002),
    ("rem", 0x0262e3b3, 0x80000000, 0x54894ea4, 0xd4894ea4),
    ("rem", 0x0262e3b3, 0xf50a0807, 0x6fdcf337, 0xf50a0807),
    ("rem", 0x0262e3b3, 0x029f47d8, 0x00000001, 0x00000000),
    ("rem", 0x0262e3b3, 0x80000000, 0x0000001f, 0xfffffffe),
    ("rem", 0x0262e3b3, 0x0b69c275, 0x0000001f, 0x00000009),
    ("rem", 0x0262e3b3, 0x97da4ce3, 0xa2f4ef63, 0xf4e55d80),
    ("rem", 0x0262e3b3, 0xfffffffe, 0x7516f15f, 0xfffffffe),
    ("rem", 0x0262e3b3, 0x00000000, 0x80000000, 0x00000000),
    ("rem", 0x0262e3b3, 0x00000001, 0xfffffffe, 0x00000001),
    ("rem", 0x0262e3b3, 0x8d587d88, 0x5c253d64, 0xe97dbaec),
    ("rem", 0x0262e3b3, 0x3a85ead8, 0x9d96cf7e, 0x3a85ead8),
    ("rem", 0x0262e3b3, 0x2c2100dd, 0xa2bed02f, 0x2c2100dd),
    ("remu", 0x0262f3b3, 0x2dbae3ff, 0x00000001, 0x00000000),
    ("remu", 0x0262f3b3, 0x1adf7973, 0x12345678, 0x08ab22fb),
    ("remu", 0x0262f3b3, 0x4142568b, 0x05fcc11e, 0x0562cb5f),
    ("remu", 0x0262f3b3, 0x4414feea, 0x1e807c2e, 0x0714068e),
    ("remu", 0x0262f3b3, 0xf9f4f5f1, 0x7fffffff, 0x79f4f5f2),
    ("remu", 0x0262f3b3, 0xaeff8b96, 0xfffffffe, 0xaeff8b96),
    ("remu", 0x0262f3b3, 0x017e49a5, 0xbe378bee, 0x017e49a5),
    ("remu", 0x0262f3b3, 0x00000002, 0x8746e09d, 0x00000002),
    ("remu", 0x0262f3b3, 0x0000001f, 0xbf014198, 0x0000001f),
    ("remu", 0x0262f3b3, 0x00000020, 0x74c96472, 0x00000020),
    ("remu", 0x0262f3b3, 0x63bfff8c, 0xdc485e6f, 0x63bfff8c),
    ("remu", 0x0262f3b3, 0x7fffffff, 0xa7684477, 0x7fffffff),
    ("remu", 0x0262f3b3, 0x8904542d, 0x2a3e078a, 0x0a4a3d8f),
    ("remu", 0x0262f3b3, 0x19afcf70, 0x53264a3e, 0x19afcf70),
    ("remu", 0x0262f3b3, 0xac12a37c, 0x00000020, 0x0000001c),
    ("remu", 0x0262f3b3, 0xffffffff, 0xd0ac11ae, 0x2f53ee51),
    ("remu", 0x0262f3b3, 0xc4bd0f26, 0xd0f21821, 0xc4bd0f26),
    ("remu", 0x0262f3b3, 0x3fbfc673, 0x4fdccc4a, 0x3fbfc673),
    ("remu", 0x0262f3b3, 0x822e52bd, 0x0f9a9ca2, 0x05596dad),
    ("remu", 0x0262f3b3, 0x426a8a04, 0xc6bac902, 0x426a8a04),
    ("remu", 0x0262f3b3, 0x0eae08a6, 0x00000020, 0x00000006),
    ("remu", 0x0262f3b3, 0x13aadaf6, 0x6142ecbd, 0x13aadaf6),
    ("remu", 0x0262f3b3, 0xcc79e103, 0x785d9827, 0x541c48dc),
    ("remu", 0x0262f3b3, 0x56bf25c1, 0x8526767e, 0x56bf25c1),
    ("remu", 0x0262f3b3, 0x59be5ce3, 0x0f3bb2be, 0x0d93df2d),
    ("remu", 0x0262f3b3, 0x1c9c3f00, 0x00000020, 0x00000000),
    ("remu", 0x0262f3b3, 0x41044d20, 0xd864858d, 0x41044d20),
    ("remu", 0x0262f3b3, 0x00000001, 0xb9b0f1df, 0x00000001),
    ("remu", 0x0262f3b3, 0x30477c2d, 0x90bf9450, 0x30477c2d),
    ("remu", 0x0262f3b3, 0x80000000, 0x0000001f, 0x00000002),
    ("remu", 0x0262f3b3, 0xa5b8a539, 0x64eb4213, 0x40cd6326),
    ("remu", 0x0262f3b3, 0x71264115, 0x83ad2850, 0x71264115),
    ("remu", 0x0262f3b3, 0x6ffeee61, 0x5712caf1, 0x18ec2370),
    ("remu", 0x0262f3b3, 0x7fffffff, 0xffffffff, 0x7fffffff),
    ("remu", 0x0262f3b3, 0x52934b7a, 0x7d0b6b63, 0x52934b7a),
    ("remu", 0x0262f3b3, 0x358c056f, 0x80000000, 0x358c056f),
    ("remu", 0x0262f3b3, 0x80000000, 0x4b12eb15, 0x34ed14eb),
    ("remu", 0x0262f3b3, 0x7fffffff, 0x6d380547, 0x12c7fab8),
    ("remu", 0x0262f3b3, 0x38666a96, 0x12345678, 0x01c9672e),
    ("remu", 0x0262f3b3, 0xbce94da3, 0x00000021, 0x0000000a),
    ("addi", 0x80028393, 0xab83a80d, 0x00000000, 0xab83a00d),
    ("addi", 0x00028393, 0x8ab5df83, 0x00000000, 0x8ab5df83),
    ("addi", 0x80028393, 0x00000020, 0x00000000, 0xfffff820),
    ("addi", 0xfff28393, 0x670061cd, 0x00000000, 0x670061cc),
    ("addi", 0xf1128393, 0x7fffffff, 0x00000000, 0x7fffff10),
    ("addi", 0xfff28393, 0x80000000, 0x00000000, 0x7fffffff),
    ("addi", 0x7ff28393, 0x9a1380f8, 0x00000000, 0x9a1388f7),
    ("addi", 0x00028393, 0xd3f150dd, 0x00000000, 0xd3f150dd),
    ("addi", 0x00028393, 0xcb9fe2ae, 0x00000000, 0xcb9fe2ae),
    ("addi", 0x00128393, 0x5984a260, 0x00000000, 0x5984a261),
    ("addi", 0x7ff28393, 0xdedf42d8, 0x00000000, 0xdedf4ad7),
    ("addi", 0x4a128393, 0xbe83d1b3, 0x00000000, 0xbe83d654),
    ("addi", 0x00128393, 0x87f2bd60, 0x00000000, 0x87f2bd61),
    ("addi", 0x00128393, 0x7fffffff, 0x00000000, 0x80000000),
    ("addi", 0x00128393, 0x5f255bab, 0x00000000, 0x5f255bac),
    ("addi", 0xfff28393, 0x2f859981, 0x00000000, 0x2f859980),
    ("addi", 0x2b728393, 0x0404cd32, 0x00000000, 0x0404cfe9),
    ("addi", 0x7ff28393, 0x00000002, 0x00000000, 0x00000801),
    ("addi", 0x00028393, 0x12345678, 0x00000000, 0x12345678),
    ("addi", 0xfff28393, 0x4325a474, 0x00000000, 0x4325a473),
    ("addi", 0x00128393, 0x7fffffff, 0x00000000, 0x80000000),
    ("addi", 0x80028393, 0x00000002, 0x00000000, 0xfffff802),
    ("addi", 0x00128393, 0x86f9a574, 0x00000000, 0x86f9a575),
    ("addi", 0xfff28393, 0x4bec05e1, 0x00000000, 0x4bec05e0),
    ("addi", 0xe2928393, 0x12345678, 0x00000000, 0x123454a1),
    ("addi", 0x00128393, 0x00000020, 0x00000000, 0x00000021),
    ("addi", 0x7ff28393, 0xfffffffe, 0x00000000, 0x000007fd),
    ("addi", 0x7ff28393, 0xffffffff, 0x00000000, 0x000007fe),
    ("addi", 0x00128393, 0x72b51a07, 0x00000000, 0x72b51a08),
    ("addi", 0xfff28393, 0xfffffffe, 0x00000000, 0xfffffffd),
    ("slti", 0x8002a393, 0xffffffff, 0x00000000, 0x00000000),
    ("slti", 0x0012a393, 0x3f0149fc, 0x00000000, 0x00000000),
    ("slti", 0xef52a393, 0x61fd57ff, 0x00000000, 0x00000000),
    ("slti", 0xfff2a393, 0x884cbd7d, 0x00000000, 0x00000001),
    ("slti", 0x8002a393, 0x7046467f, 0x00000000, 0x00000000),
    ("slti", 0xfff2a393, 0x80000000, 0x00000000, 0x00000001),
    ("slti", 0x7ff2a393, 0x63f879b7, 0x00000000, 0x00000000),
    ("slti", 0x0002a393, 0x00000020, 0x00000000, 0x00000000),
    ("slti", 0x8002a393, 0xb93c07f1, 0x00000000, 0x00000001),
    ("slti", 0x0002a393, 0x1b4aaea7, 0x00000000, 0x00000000),
    ("slti", 0x7ff2a393, 0x75c0fa70, 0x00000000, 0x00000000),
    ("slti", 0x8002a393, 0xf981ccff, 0x00000000, 0x00000001),
    ("slti", 0x8002a393, 0x00000002, 0x00000000, 0x00000000),
    ("slti", 0xfff2a393, 0x00000021, 0x00000000, 0x00000000),
    ("slti", 0x7ff2a393, 0x3470ab75, 0x00000000, 0x00000000),
    ("slti", 0x8d92a393, 0x80000000, 0x00000000, 0x00000001),
    ("slti", 0x4c52a393, 0x5863e982, 0x00000000, 0x00000000),
    ("slti", 0x7ff2a393, 0xc1c1f05c, 0x00000000, 0x00000001),
    ("slti", 0x8002a393, 0xfffffffe, 0x00000000, 0x00000000),
    ("slti", 0x0012a393, 0x958e273b, 0x00000000, 0x00000001),
    ("slti", 0xfff2a393, 0x80000000, 0x00000000, 0x00000001),
    ("slti", 0x7ff2a393, 0xfffffffe, 0x00000000, 0x00000001),
    ("slti", 0x7ff2a393, 0x00000000, 0x00000000, 0x00000001),
    ("slti", 0x8002a393, 0x1df4faef, 0x00000000, 0x00000000),
    ("slti", 0x0002a393, 0x8d66aa83, 0x00000000, 0x00000001),
    ("slti", 0x0002a393, 0xf8faf490, 0x00000000, 0x00000001),
    ("slti", 0x8002a393, 0x7f2c2bbb, 0x00000000, 0x00000000),
    ("slti", 0x0002a393, 0x00000002, 0x00000000, 0x00000000),
    ("slti", 0x0002a393, 0x00000002, 0x00000000, 0x00000000),
    ("slti", 0x0002a393, 0x504e48ba, 0x00000000, 0x00000000),
    ("sltiu", 0x8002b393, 0x5e7218ff, 0x00000000, 0x00000001),
    ("sltiu", 0xfff2b393, 0x00000001, 0x00000000, 0x00000001),
    ("sltiu", 0xfff2b393, 0x29637c3d, 0x00000000, 0x00000001),
    ("sltiu", 0x91c2b393, 0x147e5f95, 0x00000000, 0x00000001),
    ("sltiu", 0xfff2b393, 0x7fffffff, 0x00000000, 0x00000001),
    ("sltiu", 0xfff2b393, 0x12345678, 0x00000000, 0x00000001),
    ("sltiu", 0xfff2b393, 0xf8243fa4, 0x00000000, 0x00000001),
    ("sltiu", 0x0002b393, 0x1f30d7ce, 0x00000000, 0x00000000),
    ("sltiu", 0x0002b393, 0x33499863, 0x00000000, 0x00000000),
    ("sltiu", 0x0002b393, 0x12345678, 0x00000000, 0x00000000),
    ("sltiu", 0xfff2b393, 0x5e6fe3ee, 0x00000000, 0x00000001),
    ("sltiu", 0x0012b393, 0x850bb97e, 0x00000000, 0x00000000),
    ("sltiu", 0x0002b393, 0x77a1469f, 0x00000000, 0x00000000),
    ("sltiu", 0x7ff2b393, 0xf56ab26a, 0x00000000, 0x00000000),
    ("sltiu", 0x0012b393, 0x80000000, 0x00000000, 0x00000000),
    ("sltiu", 0x8002b393, 0x00000002, 0x00000000, 0x00000001),
    ("sltiu", 0x7ff2b393, 0xe2816838, 0x00000000, 0x00000000),
    ("sltiu", 0xa4b2b393, 0x899b18f4, 0x00000000, 0x00000001),
    ("sltiu", 0xfff2b393, 0x46f63942, 0x00000000, 0x00000001),
    ("sltiu", 0x8002b393, 0x29f4893c, 0x00000000, 0x00000001),
    ("sltiu", 0xfff2b393, 0x8d5f4006, 0x00000000, 0x00000001),
    ("sltiu", 0x0012b393, 0xb34bfda2, 0x00000000, 0x00000000),
    ("sltiu", 0x8002b393, 0x00000000, 0x00000000, 0x00000001),
    ("sltiu", 0x0012b393, 0x82a491bd, 0x00000000, 0x00000000),
    ("sltiu", 0x7ff2b393, 0x78f45a3c, 0x00000000, 0x00000000),
    ("sltiu", 0x3162b393, 0x80000000, 0x00000000, 0x00000000),
    ("sltiu", 0x0002b393, 0x13dcdcbd, 0x00000000, 0x00000000),
    ("sltiu", 0x7ff2b393, 0x0000001f, 0x00000000, 0x00000001),
    ("sltiu", 0x0002b393, 0x0d9a06ab, 0x00000000, 0x00000000),
    ("sltiu", 0x0012b393, 0xe2cde288, 0x00000000, 0x00000000),
    ("xori", 0xf692c393, 0x0ec73113, 0x00000000, 0xf138ce7a),
    ("xori", 0x0012c393, 0x7d1bc0d4, 0x00000000, 0x7d1bc0d5),
    ("xori", 0xeab2c393, 0x652258b1, 0x00000000, 0x9adda61a),
    ("xori", 0xfff2c393, 0xf44e4b09, 0x00000000, 0x0bb1b4f6),
    ("xori", 0x8002c393, 0xab43ace8, 0x00000000, 0x54bc54e8),
    ("xori", 0x8002c393, 0xfaa8fbad, 0x00000000, 0x055703ad),
    ("xori", 0x0002c393, 0x2f92ac5f, 0x00000000, 0x2f92ac5f),
    ("xori", 0x0012c393, 0x74339c93, 0x00000000, 0x74339c92),
    ("xori", 0xb172c393, 0x12345678, 0x00000000, 0xedcbad6f),
    ("xori", 0x7ff2c393, 0xd206ccf2, 0x00000000, 0xd206cb0d),
    ("xori", 0xe7b2c393, 0x2f330583, 0x00000000, 0xd0ccfbf8),
    ("xori", 0x7ff2c393, 0x6efd7588, 0x00000000, 0x6efd7277),
    ("xori", 0x7ff2c393, 0x00000002, 0x00000000, 0x000007fd),
    ("xori", 0x6922c393, 0x4fb1cb25, 0x00000000, 0x4fb1cdb7),
    ("xori", 0x5bd2c393, 0xbfff5b84, 0x00000000, 0xbfff5e39),
    ("xori", 0x7ff2c393, 0x0000001f, 0x00000000, 0x000007e0),
    ("xori", 0x8002c393, 0xcc52beec, 0x00000000, 0x33ad46ec),
    ("xori", 0x0002c393, 0xbe417865, 0x00000000, 0xbe417865),
    ("xori", 0x8e62c393, 0x3077e9fb, 0x00000000, 0xcf88111d),
    ("xori", 0xb562c393, 0x00000002, 0x00000000, 0xfffffb54),
    ("xori", 0x8002c393, 0x76b8c88c, 0x00000000, 0x8947308c),
    ("xori", 0xc702c393, 0x23e51423, 0x00000000, 0xdc1ae853),
    ("xori", 0x7ff2c393, 0xc38a6232, 0x00000000, 0xc38a65cd),
    ("xori", 0x0002c393, 0xfffffffe, 0x00000000, 0xfffffffe),
    ("xori", 0x0002c393, 0xb8e830cc, 0x00000000, 0xb8e830cc),
    ("xori", 0xfff2c393, 0x27442c38, 0x00000000, 0xd8bbd3c7),
    ("xori", 0x0012c393, 0xef55b326, 0x00000000, 0xef55b327),
    ("xori", 0x8002c393, 0x5ae0b071, 0x00000000, 0xa51f4871),
    ("xori", 0x0002c393, 0x85efe44c, 0x00000000, 0x85efe44c),
    ("xori", 0xfff2c393, 0xda79d29b, 0x00000000, 0x25862d64),
    ("ori", 0x0012e393, 0xb5b9c866, 0x00000000, 0xb5b9c867),
    ("ori", 0x6d32e393, 0x06d29a86, 0x00000000, 0x06d29ed7),
    ("ori", 0x0012e393, 0x00000021, 0x00000000, 0x00000021),
    ("ori", 0x8002e393, 0xe75f3764, 0x00000000, 0xffffff64),
    ("ori", 0x7ff2e393, 0xe81588f1, 0x00000000, 0xe8158fff),
    ("ori", 0xfff2e393, 0x030691b6, 0x00000000, 0xffffffff),
    ("ori", 0x7672e393, 0x93fa7774, 0x00000000, 0x93fa7777),
    ("ori", 0x8002e393, 0x5a9b3d1e, 0x00000000, 0xfffffd1e),
    ("ori", 0xfdc2e393, 0x00000000, 0x00000000, 0xffffffdc),
    ("ori", 0xfff2e393, 0x12345678, 0x00000000, 0xffffffff),
    ("ori", 0x8002e393, 0x7fffffff, 0x00000000, 0xffffffff),
    ("ori", 0x8002e393, 0x98aa1b91, 0x00000000, 0xfffffb91),
    ("ori", 0x7ff2e393, 0xcf24fb78, 0x00000000, 0xcf24ffff),
    ("ori", 0xfff2e393, 0x85731623, 0x00000000, 0xffffffff),
    ("ori", 0x7ff2e393, 0x53bf30a3, 0x00000000, 0x53bf37ff),
    ("ori", 0x7ff2e393, 0xc732028a, 0x00000000, 0xc73207ff),
    ("ori", 0xfff2e393, 0x4fe33154, 0x00000000, 0xffffffff),
    ("ori", 0xe3d2e393, 0x80000000, 0x00000000, 0xfffffe3d),
    ("ori", 0x7152e393, 0x00000000, 0x00000000, 0x00000715),
    ("ori", 0xfff2e393, 0xd468d666, 0x00000000, 0xffffffff),
    ("ori", 0x8002e393, 0x3826145e, 0x00000000, 0xfffffc5e),
    ("ori", 0x0002e393, 0x00000021, 0x00000000, 0x00000021),
    ("ori", 0xfff2e393, 0x80000000, 0x00000000, 0xffffffff),
    ("ori", 0x0002e393, 0xde67ade5, 0x00000000, 0xde67ade5),
    ("ori", 0x7ff2e393, 0xffffffff, 0x00000000, 0xffffffff),
    ("ori", 0xfff2e393, 0x00000001, 0x00000000, 0xffffffff),
    ("ori", 0x7ff2e393, 0x00000002, 0x00000000, 0x000007ff),
    ("ori", 0xe1a2e393, 0xf463a401, 0x00000000, 0xfffffe1b),
    ("ori", 0xfff2e393, 0x332c7bdd, 0x00000000, 0xffffffff),
    ("ori", 0x7ff2e393, 0x00000002, 0x00000000, 0x000007ff),
    ("andi", 0x0002f393, 0x29f4d00a, 0x00000000, 0x00000000),
    ("andi", 0xa372f393, 0x00000020, 0x00000000, 0x00000020),
    ("andi", 0xfff2f393, 0x80000000, 0x00000000, 0x80000000),
    ("andi", 0x7ff2f393, 0xe8704fc4, 0x00000000, 0x000007c4),
    ("andi", 0x8002f393, 0x5d2a9e44, 0x00000000, 0x5d2a9800),
    ("andi", 0x8002f393, 0x00000002, 0x00000000, 0x00000000),
    ("andi", 0xfff2f393, 0x4985585c, 0x00000000, 0x4985585c),
    ("andi", 0x7ff2f393, 0xffffffff, 0x00000000, 0x000007ff),
    ("andi", 0xfff2f393, 0x00000001, 0x00000000, 0x00000001),
    ("andi", 0xfff2f393, 0x56559a07, 0x00000000, 0x56559a07),
    ("andi", 0x7ff2f393, 0xe0b06980, 0x00000000, 0x00000180),
    ("andi", 0x8002f393, 0x0d7389c3, 0x00000000, 0x0d738800),
    ("andi", 0xfff2f393, 0xef9dcf62, 0x00000000, 0xef9dcf62),
    ("andi", 0x8002f393, 0xb85c7106, 0x00000000, 0xb85c7000),
    ("andi", 0x0012f393, 0x9d3629d3, 0x00000000, 0x00000001),
    ("andi", 0x8002f393, 0x5507bcf2, 0x00000000, 0x5507b800),
    ("andi", 0x87e2f393, 0x00000021, 0x00000000, 0x00000020),
    ("andi", 0x7032f393, 0x00000021, 0x00000000, 0x00000001),
    ("andi", 0xfe12f393, 0x12345678, 0x00000000, 0x12345660),
    ("andi", 0x8002f393, 0x44106ba6, 0x00000000, 0x44106800),
    ("andi", 0x0012f393, 0xd1b71fc7, 0x00000000, 0x00000001),
    ("andi", 0x0002f393, 0xf09af064, 0x00000000, 0x00000000),
    ("andi", 0x8002f393, 0xb932f0bf, 0x00000000, 0xb932f000),
    ("andi", 0xfff2f393, 0x7fffffff, 0x00000000, 0x7fffffff),
    ("andi", 0x0002f393, 0xb7919df2, 0x00000000, 0x00000000),
    ("andi", 0x7ff2f393, 0x40dd8e12, 0x00000000, 0x00000612),
    ("andi", 0x7ff2f393, 0x00000002, 0x00000000, 0x00000002),
    ("andi", 0x7ff2f393, 0x9f18f525, 0x00000000, 0x00000525),
    ("andi", 0x8002f393, 0x00000020, 0x00000000, 0x00000000),
    ("andi", 0x7ff2f393, 0x00000021, 0x00000000, 0x00000021),
    ("slli", 0x00f29393, 0xef2ed960, 0x00000000, 0x6cb00000),
    ("slli", 0x01029393, 0xffffffff, 0x00000000, 0xffff0000),
    ("slli", 0x00a29393, 0xffffffff, 0x00000000, 0xfffffc00),
    ("slli", 0x01629393, 0xfec0194d, 0x00000000, 0x53400000),
    ("slli", 0x00429393, 0x00000001, 0x00000000, 0x00000010),
    ("slli", 0x00d29393, 0xc9a1917a, 0x00000000, 0x322f4000),
    ("slli", 0x00229393, 0xa5325d61, 0x00000000, 0x94c97584),
    ("slli", 0x00429393, 0x28ae01a3, 0x00000000, 0x8ae01a30),
    ("slli", 0x00a29393, 0x00000002, 0x00000000, 0x00000800),
    ("slli", 0x01d29393, 0x00000001, 0x00000000, 0x20000000),
    ("slli", 0x00e29393, 0x023bc92f, 0x00000000, 0xf24bc000),
    ("slli", 0x01e29393, 0xe26018ce, 0x00000000, 0x80000000),
    ("slli", 0x00d29393, 0x03c1f699, 0x00000000, 0x3ed32000),
    ("slli", 0x00b29393, 0xbd47e701, 0x00000000, 0x3f380800),
    ("slli", 0x00929393, 0x7fffffff, 0x00000000, 0xfffffe00),
    ("slli", 0x00129393, 0xffffffff, 0x00000000, 0xfffffffe),
    ("slli", 0x00729393, 0x5b07a0ac, 0x00000000, 0x83d05600),
    ("slli", 0x00729393, 0x12345678, 0x00000000, 0x1a2b3c00),
    ("slli", 0x01529393, 0x00000021, 0x00000000, 0x04200000),
    ("slli", 0x01c29393, 0x00000002, 0x00000000, 0x20000000),
    ("srli", 0x01e2d393, 0x00000002, 0x00000000, 0x00000000),
    ("srli", 0x0062d393, 0x2a802dc8, 0x00000000, 0x00aa00b7),
    ("srli", 0x0072d393, 0x5f5150b3, 0x00000000, 0x00bea2a1),
    ("srli", 0x0022d393, 0x00000002, 0x00000000, 0x00000000),
    ("srli", 0x01c2d393, 0x00000020, 0x00000000, 0x00000000),
    ("srli", 0x0192d393, 0x9c69b195, 0x00000000, 0x0000004e),
    ("srli", 0x00e2d393, 0x5019e146, 0x00000000, 0x00014067),
    ("srli", 0x0072d393, 0x3c5090e1, 0x00000000, 0x0078a121),
    ("srli", 0x00a2d393, 0x9b60a8e6, 0x00000000, 0x0026d82a),
    ("srli", 0x0182d393, 0xfffffffe, 0x00000000, 0x000000ff),
    ("srli", 0x0162d393, 0xeec814ed, 0x00000000, 0x000003bb),
    ("srli", 0x0172d393, 0xafecf490, 0x00000000, 0x0000015f),
    ("srli", 0x0042d393, 0x4934dbfa, 0x00000000, 0x04934dbf),
    ("srli", 0x01d2d393, 0x8983905e, 0x00000000, 0x00000004),
    ("srli", 0x01a2d393, 0x5e3cf9a3, 0x00000000, 0x00000017),
    ("srli", 0x0122d393, 0x19d7304b, 0x00000000, 0x00000675),
    ("srli", 0x01f2d393, 0x00000021, 0x00000000, 0x00000000),
    ("srli", 0x01e2d393, 0x7e72daa6, 0x00000000, 0x00000001),
    ("srli", 0x01f2d393, 0x1f610b7b, 0x00000000, 0x00000000),
    ("srli", 0x00d2d393, 0x32535293, 0x00000000, 0x0001929a),
    ("srai", 0x4182d393, 0x62ff17df, 0x00000000, 0x00000062),
    ("srai", 0x4082d393, 0x4bb48749, 0x00000000, 0x004bb487),
    ("srai", 0x41a2d393, 0x7fffffff, 0x00000000, 0x0000001f),
    ("srai", 0x4162d393, 0x5f9214bf, 0x00000000, 0x0000017e),
    ("srai", 0x4022d393, 0xec1d9828, 0x00000000, 0xfb07660a),
    ("srai", 0x4142d393, 0x12345678, 0x00000000, 0x00000123),
    ("srai", 0x4042d393, 0xbf1dd9b5, 0x00000000, 0xfbf1dd9b),
    ("srai", 0x4102d393, 0xbe151f47, 0x00000000, 0xffffbe15),
    ("srai", 0x41e2d393, 0x4586f6ee, 0x00000000, 0x00000001),
    ("srai", 0x4012d393, 0x6c176ab0, 0x00000000, 0x360bb558),
    ("srai", 0x41f2d393, 0x00000001, 0x00000000, 0x00000000),
    ("srai", 0x4022d393, 0x00000001, 0x00000000, 0x00000000),
    ("srai", 0x40f2d393, 0x00000021, 0x00000000, 0x00000000),
    ("srai", 0x4112d393, 0x00000002, 0x00000000, 0x00000000),
    ("srai", 0x4042d393, 0x11cd40cc, 0x00000000, 0x011cd40c),
    ("srai", 0x4002d393, 0xa227703b, 0x00000000, 0xa227703b),
    ("srai", 0x4182d393, 0x80000000, 0x00000000, 0xffffff80),
    ("srai", 0x4012d393, 0x18e220f6, 0x00000000, 0x0c71107b),
    ("srai", 0x4062d393, 0x6e31c2ec, 0x00000000, 0x01b8c70b),
    ("srai", 0x4162d393, 0xcf0054e6, 0x00000000, 0xffffff3c),
];
