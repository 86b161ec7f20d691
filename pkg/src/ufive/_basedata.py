"""Hard-coded integer tables for the degree-5 operator engine.

Contents:

* ``MODEQ_A`` -- coefficient lists for the five polynomials a_0..a_4 in the
  degree-5 modular equation  x^5 + sum_j a_j(y) x^j = 0  relating the
  level-10 hauptmodul at nested arguments.  ``MODEQ_A[j][i]`` is the
  coefficient of y^i in a_j.  The x^3 coefficient of a_2 is -13525; the
  value -13125 that circulates in one transcription fails both the Newton
  power-sum cross-check against ``UX_BASE`` and the resultant identity
  behind ``MODEQ_B``, so it is kept separately in ``MODEQ_A_VARIANT`` for
  the discrepancy probe in the test suite.
* ``MODEQ_B`` -- coefficient lists b_0..b_5 for the companion equation in
  z = 1 + 5x:  sum_k b_k(z(y)) z^k = 0, with b_5 = 1.
* ``UX_BASE`` -- the ten seed images U^(i)(x^m), i in {0,1}, m in 0..4,
  as integer polynomial coefficient lists.  For i = 1 the image is the
  polynomial itself; for i = 0 the listed polynomial sits over (1+5x)^6.

All entries verified against independent q-series recomputation by
``tests/test_localize.py`` and the ``verify base-relations`` command.
"""

MODEQ_A = [
    [0, -1, -20, -150, -500, -625],
    [0, -15, -305, -2325, -7875, -10000],
    [0, -85, -1750, -13525, -46500, -60000],
    [0, -215, -4475, -35000, -122000, -160000],
    [0, -205, -4300, -34000, -120000, -160000],
]

# Same table with the alternate a_2 x^3 coefficient (see module docstring).
MODEQ_A_VARIANT = [row[:] for row in MODEQ_A]
MODEQ_A_VARIANT[2][3] = -13125

MODEQ_B = [
    [0, 0, 0, 0, 0, -1],
    [1, 5, 5, 5, 5, -16],
    [-4, -15, 10, 35, 60, -96],
    [6, 15, -35, 40, 240, -256],
    [-4, -5, 20, -80, 320, -256],
    [1],
]

UX_BASE = {
    (0, 0): [0, 0, 5705, 6840120, 2034152125, 280484938650, 22921365211325, 1260917405154520, 50400843190048480, 1539115922208139200, 37183654303328448000, 728924483359472640000, 11816089262411136000000, 160681440628058880000000, 1853291134193264640000000, 18284160727362809856000000, 155286793010086625280000000, 1140657222505472000000000000, 7269894420215070720000000000, 40277647277404979200000000000, 194099187864646451200000000000, 813054581193729638400000000000, 2954545150241538048000000000000, 9282005730758492160000000000000, 25080951875200614400000000000000, 57872525958316032000000000000000, 112916020309524480000000000000000, 183812885074411520000000000000000, 245082228994867200000000000000000, 260725452832768000000000000000000, 212837104353280000000000000000000, 125198296678400000000000000000000, 47244640256000000000000000000000, 8589934592000000000000000000000],
    (0, 1): [0, 0, 1596, 5311629, 3020673965, 693946917880, 88012336687140, 7203973630079449, 417078090095103516, 18123681491802321200, 615843754566814808000, 16857245810889643680000, 380061235251469769600000, 7179360858330987609600000, 115153019537919900211200000, 1584889574408762616832000000, 18875287036126384148480000000, 195815273618900539392000000000, 1778815480050553692160000000000, 14206927272980568637440000000000, 100058873107538207703040000000000, 622718357721614503116800000000000, 3428656886761288105984000000000000, 16707165479275661885440000000000000, 72013094304097396326400000000000000, 274190033219424878592000000000000000, 920048921836076924928000000000000000, 2711506126769477386240000000000000000, 6985969318446812364800000000000000000, 15637700398221885440000000000000000000, 30166681246666588160000000000000000000, 49621782059863244800000000000000000000, 68625507039156633600000000000000000000, 78284718944026624000000000000000000000, 71718179952394240000000000000000000000, 50720986785382400000000000000000000000, 25993142075392000000000000000000000000, 8589934592000000000000000000000000000, 1374389534720000000000000000000000000],
    (0, 2): [0, 0, 268, 2847432, 3155658820, 1202043333790, 233251365647870, 27857600543181592, 2282412359335489853, 137474599581860685500, 6382595114107468178000, 236333942045815117200000, 7159344666536530274720000, 180943148092126406540160000, 3874442157232846507737600000, 71154385951639684561408000000, 1131931871787660010234880000000, 15724017231814160548864000000000, 191993970181152296671232000000000, 2071679521214318766489600000000000, 19840725410941052260024320000000000, 169240207863514163393331200000000000, 1289257956753574377619456000000000000, 8789154839425847410032640000000000000, 53694599262146012197683200000000000000, 294194062113759948701696000000000000000, 1445922789195393074724864000000000000000, 6372283630042655710248960000000000000000, 25156363490877335666688000000000000000000, 88814063288837761662976000000000000000000, 279743502586000693002240000000000000000000, 783588083068217747046400000000000000000000, 1943797721585087728844800000000000000000000, 4247467234308952948736000000000000000000000, 8120384728408910725120000000000000000000000, 13465927624462381875200000000000000000000000, 19155038490681409536000000000000000000000000, 23036102962346721280000000000000000000000000, 22969782997939650560000000000000000000000000, 18482412505792512000000000000000000000000000, 11532502585835520000000000000000000000000000, 5236424127283200000000000000000000000000000, 1539316278886400000000000000000000000000000, 219902325555200000000000000000000000000000],
    (0, 3): [0, 0, 25, 1083750, 2419268600, 1533044850875, 451892277223875, 77776397020017600, 8876969029993551625, 727751880723215938525, 45237746915792486076500, 2216202089061921720156000, 88063763926314004467152000, 2901622367042821273526240000, 80660306943461135362236800000, 1918093917299266390588800000000, 39459730054782721266716160000000, 708795736244147980459443200000000, 11201811678733852133717299200000000, 156752971920695775627182080000000000, 1952565980789217283863347200000000000, 21745861234519182941633740800000000000, 217330181296111203156344832000000000000, 1954986367634769250929868800000000000000, 15867347909658771160720998400000000000000, 116421209420849214282399744000000000000000, 773301464019936672352829440000000000000000, 4654578055099292525988413440000000000000000, 25401759242372849348693196800000000000000000, 125704489323417659460550656000000000000000000, 563904329114669957135728640000000000000000000, 2291384934896565019580825600000000000000000000, 8423518909348688068345856000000000000000000000, 27966210361515509645574144000000000000000000000, 83658769333926385994956800000000000000000000000, 224821089074620615622656000000000000000000000000, 540741258958646666067968000000000000000000000000, 1158650329533680577413120000000000000000000000000, 2198994699321618726912000000000000000000000000000, 3670226839781351882752000000000000000000000000000, 5338951094289689477120000000000000000000000000000, 6691954927703970283520000000000000000000000000000, 7121217229055422627840000000000000000000000000000, 6307992271770668236800000000000000000000000000000, 4525788871530643456000000000000000000000000000000, 2526853642489692160000000000000000000000000000000, 1030022492900556800000000000000000000000000000000, 272678883688448000000000000000000000000000000000, 35184372088832000000000000000000000000000000000],
    (0, 4): [0, 0, 1, 296324, 1400331440, 1491537289180, 666654357758190, 164127484896644144, 25818034832153226421, 2843942677492333687050, 233247182152327524438975, 14876273050366789151536400, 761935276117868629545420000, 32118457754484194871176800000, 1135956912571962510189130400000, 34231269539693917027064800000000, 889959895359737292913435520000000, 20168696740441852125087521280000000, 401853770227841145701015936000000000, 7090293594621615513260024832000000000, 111455620826575249212238069760000000000, 1568967903706184088975184281600000000000, 19865297696614393785791188992000000000000, 227065713010913459721992798208000000000000, 2350395554799549839893043609600000000000000, 22090326137698781193612296192000000000000000, 188920535524484098164060192768000000000000000, 1472786798447713704939919769600000000000000000, 10480689728875682601093981798400000000000000000, 68152666405070998605987315712000000000000000000, 405254490887530431856613785600000000000000000000, 2204414239119153895179708006400000000000000000000, 10970036975349264582008478105600000000000000000000, 49929921460604339849107865600000000000000000000000, 207727909385809764269938442240000000000000000000000, 789224428145826945154469068800000000000000000000000, 2734666462414638550878257152000000000000000000000000, 8626866866620198090933534720000000000000000000000000, 24722506007012126262789406720000000000000000000000000, 64185847480498768484237312000000000000000000000000000, 150467914734947763855818752000000000000000000000000000, 317205685483135843705028608000000000000000000000000000, 598387657370971073308262400000000000000000000000000000, 1004032323013383412514816000000000000000000000000000000, 1487355820084245534081024000000000000000000000000000000, 1927442844590278705152000000000000000000000000000000000, 2159710523624808618393600000000000000000000000000000000, 2061307549285828316364800000000000000000000000000000000, 1642771482986634280960000000000000000000000000000000000, 1063549153298423480320000000000000000000000000000000000, 537321656791806771200000000000000000000000000000000000, 198721333557723136000000000000000000000000000000000000, 47850746040811520000000000000000000000000000000000000, 5629499534213120000000000000000000000000000000000000],
    (1, 0): [1],
    (1, 1): [0, 41, 860, 6800, 24000, 32000],
    (1, 2): [0, 86, 10195, 366600, 6534800, 68384000, 450720000, 1907200000, 5056000000, 7680000000, 5120000000],
    (1, 3): [0, 51, 27495, 2836265, 128688900, 3343692000, 56283680000, 656205600000, 5502096000000, 33821312000000, 153192960000000, 506956800000000, 1195008000000000, 1904640000000000, 1843200000000000, 819200000000000],
    (1, 4): [0, 12, 32674, 8579260, 831492275, 42958434000, 1396773180000, 31314949600000, 511802288800000, 6319880448000000, 60349364480000000, 452174745600000000, 2679038592000000000, 12574269440000000000, 46561935360000000000, 134544588800000000000, 297365504000000000000, 485949440000000000000, 553779200000000000000, 393216000000000000000, 131072000000000000000],
}

# Linear forms in the symbols s(2)..s(8) arising from the two-step operator
# composition on a denominator-exponent-1 element: T_HAT_GOLDEN[w] is
# (scale, coefficients of s(2)..s(8)) where the true form is (1/scale) times
# the integer vector.  T_HAT_COMBOS holds the two displayed combinations
# (labels give the w-multiset).  Machine-transcribed; do not edit by hand.

T_HAT_GOLDEN = {
    2: (5, [-624, -1664, 94204, 99616, 57078, 19008, 3708]),
    3: (5, [28224, 75264, -3621954, -3834516, -2197503, -731808, -142758]),
    4: (1, [715008, 1906688, -67390288, -71546272, -41020056, -13660416, -2664816]),
    5: (1, [25337256, 67566016, -6656426, -33820304, -21775257, -7251552, -1414602]),
    6: (1, [457837968, 1220901248, 140880948572, 147501656288, 84383715654, 28101294144, 5481881244]),
    7: (5, [18893919144, 50383784384, 38559332136626, 40484108853704, 23170599952857, 7716226285152, 1505248688202]),
    8: (5, [-116748977604, -311330606944, 1303629422734184, 1369503027522686, 783890939008863, 261049773444768, 50924482319718]),
}

T_HAT_COMBOS = {
    "t2+t3+2t4+t5": [26772792, 71394112, -142142552, -177659828, -104243454, -34714944, -6772044],
    "4t4+t6+t7+t8": [-19110313692, -50960836512, 268578362361582, 282144642746478, 161496527427774, 53781246598464, 10491417423564],
}
