#ifndef FYSHUFFLE_DETAIL_CHI2_TABLE_HPP_
#define FYSHUFFLE_DETAIL_CHI2_TABLE_HPP_

// Generated by tools/gen_chi2_table.py. Do not edit.
// kChi2Critical001[df - 1] = upper 0.001 quantile of chi2(df).

#include <array>

namespace fyshuffle::detail {

inline constexpr int kChi2TableMaxDf = 5040;

inline constexpr std::array<double, 5040> kChi2Critical001 = {
    10.827566170662733, 13.815510557964274, 16.266236196238129, 18.466826952903173,
    20.515005652432876, 22.457744484825323, 24.321886347856854, 26.124481558376143,
    27.877164871256575, 29.588298445074422, 31.264133620239988, 32.909490407360209,
    34.52817897487089, 36.123273680398142, 37.697298218353829, 39.252354790768479,
    40.790216706902527, 42.31239633167997, 43.820195964517531, 45.314746618125866,
    46.797038041561301, 48.267942290835187, 49.728232466431507, 51.178597777377391,
    52.619655776172827, 54.051962388576655, 55.476020205745208, 56.892285393353625,
    58.30117348979492, 59.703064304429944, 61.098306081058141, 62.487219057088495,
    63.870098522344954, 65.247217460942423, 66.618828843701039, 67.985167626024236,
    69.346452496241199, 70.702887411505031, 72.054662951987794, 73.401957518991026,
    74.744938398423741, 76.083762707700032, 77.418578241313938, 78.749524228043029,
    80.076732010819015, 81.400325658710017, 82.720422519124028, 84.037133717223497,
    85.350564608593004, 86.66081519040317, 87.967980475628679, 89.272150834304483,
    90.573412305298618, 91.871846881660105, 93.16753277222854, 94.460544641878059,
    95.750953832489515, 97.038828566508727, 98.32423413474163, 99.607233069849457,
    100.88788530685825, 102.16624833184881, 103.44237731987324, 104.71632526304059,
    105.98814308961282, 107.25787977487073, 108.52558244443482, 109.79129647066173,
    111.05506556267146, 112.31693185051567, 113.57693596394476, 114.83511710619329,
    116.09151312316096, 117.34616056833924, 118.59909476379528, 119.85034985750525,
    121.09995887729859, 122.34795378165677, 123.59436550758484, 124.83922401576478,
    126.08255833316953, 127.32439659331791, 128.56476607432293, 129.80369323488026,
    131.04120374833505, 132.27732253494605, 133.51207379246577, 134.74548102514225,
    135.97756707124037, 137.20835412917324, 138.43786378233099, 139.66611702268347,
    140.8931342732306, 142.11893540936777, 143.34353977923126, 144.5669662230828,
    145.7892330917839, 147.01035826441748, 148.23035916510173, 149.44925277903889,
    150.66705566784537, 151.88378398420096, 153.09945348584785, 154.31407954898626,
    155.5276771810864, 156.74026103315299, 157.95184541147285, 159.16244428886549,
    160.37207131546973, 161.58073982908175, 162.78846286507468, 163.99525316591323,
    165.2011231902913, 166.40608512190016, 167.61015087785867, 168.81333211680516,
    170.01564024668554, 171.21708643223513, 172.41768160217916, 173.61743645615999,
    174.81636147140676, 176.01446690915446, 177.21176282083061, 178.4082590540126,
    179.60396525816927, 180.79889089020088, 181.99304521977317, 183.1864373344724,
    184.37907614477078, 185.570970388825, 186.7621286371068, 187.9525592968732,
    189.14227061648646, 190.33127068958913, 191.51956745913719, 192.70716872129785,
    193.89408212922336, 195.0803151966945, 196.26587530165207, 197.45076968960848,
    198.63500547695546, 199.81858965415918, 201.00152908886182, 202.1838305288837,
    203.36550060512525, 204.54654583438807, 205.72697262210653, 206.90678726498922,
    208.08599595359124, 209.26460477480072, 210.44261971425405, 211.62004665867846,
    212.79689139816605, 213.97315962838024, 215.14885695269811, 216.32398888429128,
    217.4985608481457, 218.67257818302434, 219.84604614337451, 221.01896990118007,
    222.19135454776256, 223.36320509553184, 224.53452647968817, 225.70532355987717,
    226.87560112179972, 228.04536387877789, 229.21461647327857, 230.38336347839578,
    231.55160939929385, 232.7193586746119, 233.88661567783117, 235.05338471860654,
    236.21967004406332, 237.3854758400602, 238.55080623241983, 239.71566528812733,
    240.8800570164986, 242.04398537031909, 243.20745424695346, 244.37046748942743,
    245.53302888748277, 246.69514217860618, 247.85681104903273, 249.01803913472386,
    250.17883002232341, 251.33918725008789, 252.49911430879683, 253.65861464263895,
    254.81769165007918, 255.97634868470323, 257.13458905604398, 258.29241603038668,
    259.44983283155648, 260.60684264168765, 261.76344860197389, 262.91965381340265,
    264.07546133747172, 265.23087419689, 266.38589537626206, 267.54052782275721,
    268.69477444676386, 269.84863812252888, 271.00212168878335, 272.15522794935316,
    273.30795967375786, 274.46031959779503, 275.61231042411265, 276.7639348227687,
    277.91519543177884, 279.06609485765216, 280.21663567591543, 281.36682043162676,
    282.51665163987724, 283.66613178628336, 284.81526332746779, 285.96404869153139,
    287.11249027851375, 288.26059046084623, 289.408351583794, 290.55577596588961,
    291.70286589935785, 292.8496236505319, 293.99605146026062, 295.1421515443086,
    296.28792609374676, 297.4333772753368, 298.5785072319062, 299.72331808271798,
    300.8678119238308, 302.01199082845386, 303.15585684729365, 304.29941200889493,
    305.44265831997444, 306.58559776574805, 307.72823231025239, 308.87056389665958,
    310.01259444758648, 311.15432586539765, 312.29576003250293, 313.43689881164892,
    314.57774404620602, 315.71829756044917, 316.85856115983319, 317.99853663126413,
    319.1382257433653, 320.27763024673658, 321.41675187421259, 322.55559234111229,
    323.69415334548722, 324.83243656836299, 325.97044367397791, 327.10817631001635,
    328.24563610783878, 329.38282468270694, 330.51974363400586, 331.65639454546084,
    332.79277898535202, 333.9288985067239, 335.064754647592, 336.20034893114575,
    337.33568286594777, 338.47075794612971, 339.6055756515849, 340.7401374481575,
    341.87444478782874, 343.00849910889946, 344.14230183617025, 345.27585438111788,
    346.40915814206937, 347.54221450437291, 348.67502484056536, 349.80759051053838,
    350.93991286170018, 352.07199322913573, 353.20383293576413, 354.33543329249289,
    355.46679559837031, 356.5979211407352, 357.72881119536379, 358.85946702661516,
    359.98988988757333, 361.12008102018774, 362.25004165541105, 363.37977301333541,
    364.50927630332592, 365.63855272415202, 366.76760346411726, 367.89642970118678,
    369.02503260311283, 370.15341332755798, 371.28157302221729, 372.40951282493756,
    373.5372338638357, 374.66473725741429, 375.79202411467656, 376.91909553523823,
    378.04595260943915, 379.17259641845186, 380.29902803438949, 381.42524852041151,
    382.55125893082834, 383.67706031120383, 384.80265369845654, 385.92804012095979,
    387.05322059863971, 388.17819614307194, 389.30296775757728, 390.42753643731567,
    391.5519031693787, 392.67606893288109, 393.80003469905034, 394.92380143131572,
    396.04737008539558, 397.1707416093833, 398.29391694383236, 399.4168970218401,
    400.53968276912997, 401.66227510413313, 402.78467493806829, 403.90688317502111,
    405.02890071202211, 406.15072843912304, 407.27236723947345, 408.39381798939456,
    409.51508155845357, 410.63615880953608, 411.75705059891783, 412.87775777633505,
    413.99828118505479, 415.118621661943, 416.23878003753293, 417.35875713609158,
    418.47855377568595, 419.598170768248, 420.71760891963902, 421.83686902971289,
    422.95595189237849, 424.07485829566167, 425.19358902176583, 426.31214484713206,
    427.43052654249857, 428.54873487295879, 429.66677059801953, 430.78463447165757,
    431.90232724237597, 433.01984965325971, 434.13720244203023, 435.25438634109952,
    436.37140207762366, 437.4882503735551, 438.60493194569506, 439.72144750574455,
    440.83779776035516, 441.95398341117902, 443.07000515491825, 444.18586368337373,
    445.30155968349305, 446.41709383741829, 447.53246682253285, 448.64767931150772,
    449.76273197234741, 450.87762546843504, 451.99236045857702, 453.10693759704702,
    454.22135753362977, 455.33562091366389, 456.44972837808422, 457.56368056346412,
    458.67747810205674, 459.79112162183583, 460.90461174653632, 462.01794909569446,
    463.13113428468682, 464.24416792476984, 465.35705062311769, 466.46978298286103,
    467.58236560312423, 468.69479907906242, 469.8070840018986, 470.91922095895956,
    472.03121053371194, 473.14305330579754, 474.25474985106848, 475.36630074162156,
    476.47770654583269, 477.58896782839059, 478.70008515033015, 479.81105906906561,
    480.92189013842295, 482.03257890867224, 483.14312592655972, 484.25353173533898,
    485.3637968748024, 486.47392188131181, 487.58390728782888, 488.69375362394527,
    489.80346141591269, 490.91303118667173, 492.02246345588145, 493.13175873994783,
    494.24091755205239, 495.34994040218038, 496.45882779714839, 497.56758024063174,
    498.67619823319205, 499.78468227230388, 500.89303285238128, 502.00125046480429,
    503.10933559794472, 504.21728873719201, 505.32511036497863, 506.4328009608052,
    507.54036100126541, 508.64779096007072, 509.75509130807455, 510.86226251329646,
    511.96930504094581, 513.07621935344582, 514.18300591045602, 515.28966516889636,
    516.39619758296897, 517.50260360418145, 518.60888368136932, 519.71503826071717,
    520.82106778578157, 521.92697269751216, 523.03275343427299, 524.13841043186426,
    525.24394412354229, 526.34935494004139, 527.45464330959351, 528.55980965794879,
    529.66485440839585, 530.76977798178166, 531.87458079653072, 532.97926326866525,
    534.08382581182377, 535.18826883728093, 536.29259275396555, 537.39679796847986,
    538.50088488511813, 539.60485390588417, 540.70870543051058, 541.81243985647552,
    542.9160575790213, 544.01955899117172, 545.12294448374928, 546.22621444539277,
    547.32936926257366, 548.43240931961384, 549.53533499870173, 550.63814667990891,
    551.74084474120684, 552.8434295584824, 553.94590150555462, 555.04826095419048,
    556.15050827412017, 557.25264383305296, 558.35466799669302, 559.45658112875401,
    560.55838359097447, 561.66007574313335, 562.76165794306382, 563.8631305466688,
    564.96449390793521, 566.06574837894834, 567.16689430990618, 568.26793204913361,
    569.36886194309602, 570.46968433641405, 571.57039957187635, 572.67100799045352,
    573.77150993131204, 574.87190573182693, 575.97219572759525, 577.07238025244931,
    578.17245963846949, 579.27243421599712, 580.37230431364719, 581.47207025832097,
    582.57173237521863, 583.67129098785108, 584.77074641805302, 585.87009898599456,
    586.96934901019335, 588.06849680752646, 589.16754269324224, 590.26648698097199,
    591.36532998274186, 592.46407200898363, 593.56271336854661, 594.66125436870914,
    595.75969531518888, 596.85803651215497, 597.9562782622379, 599.05442086654125,
    600.15246462465234, 601.25040983465215, 602.34825679312678, 603.4460057951776,
    604.54365713443156, 605.64121110305155, 606.73866799174652, 607.83602808978173,
    608.93329168498883, 610.03045906377554, 611.12753051113543, 612.22450631065828,
    613.32138674453904, 614.4181720935876, 615.51486263723871, 616.61145865356082,
    617.70796041926587, 618.80436820971806, 619.90068229894348, 620.9969029596391,
    622.09303046318132, 623.18906507963561, 624.28500707776504, 625.38085672503871,
    626.47661428764104, 627.57228003048021, 628.66785421719646, 629.76333711017071,
    630.85872897053321, 631.9540300581715, 633.04924063173883, 634.14436094866244,
    635.23939126515154, 636.33433183620559, 637.42918291562182, 638.52394475600363,
    639.61861760876832, 640.7132017241546, 641.80769735123067, 642.90210473790171,
    643.99642413091749, 645.09065577587967, 646.18479991724973, 647.27885679835606,
    648.37282666140118, 649.46670974746962, 650.56050629653419, 651.65421654746376,
    652.74784073803073, 653.841379104917, 654.93483188372193, 656.02819930896862,
    657.12148161411119, 658.21467903154144, 659.30779179259559, 660.40082012756091,
    661.49376426568256, 662.58662443517005, 663.67940086320368, 664.77209377594147,
    665.86470339852485, 666.95722995508561, 668.04967366875235, 669.14203476165619,
    670.23431345493725, 671.32650996875111, 672.41862452227451, 673.51065733371183,
    674.60260862030066, 675.69447859831826, 676.78626748308716, 677.87797548898106,
    678.96960282943121, 680.06114971693103, 681.15261636304331, 682.24400297840498,
    683.33530977273267, 684.4265369548292, 685.51768473258812, 686.60875331299997,
    687.69974290215771, 688.79065370526132, 689.88148592662458, 690.97223976967916,
    692.06291543698092, 693.15351313021438, 694.24403305019837, 695.33447539689132,
    696.42484036939618, 697.51512816596551, 698.60533898400695, 699.69547302008755,
    700.78553046993954, 701.87551152846481, 702.96541638973986, 704.05524524702093,
    705.1449982927486, 706.23467571855269, 707.32427771525715, 708.41380447288475,
    709.50325618066131, 710.59263302702118, 711.68193519961142, 712.77116288529623,
    713.86031627016212, 714.94939553952145, 716.03840087791821, 717.12733246913137,
    718.21619049617971, 719.30497514132639, 720.39368658608316, 721.4823250112147,
    722.57089059674274, 723.65938352195064, 724.74780396538745, 725.8361521048721,
    726.92442811749765, 728.01263217963549, 729.10076446693915, 730.18882515434871,
    731.27681441609468, 732.3647324257023, 733.45257935599489, 734.54035537909851,
    735.62806066644566, 736.71569538877884, 737.80325971615514, 738.89075381794942,
    739.97817786285839, 741.06553201890449, 742.15281645343964, 743.24003133314875,
    744.32717682405359, 745.4142530915168, 746.50126030024489, 747.58819861429231,
    748.67506819706512, 749.76186921132432, 750.84860181918964, 751.93526618214264,
    753.02186246103076, 754.10839081607071, 755.19485140685151, 756.28124439233829,
    757.36756993087579, 758.45382818019129, 759.54001929739843, 760.62614343900032,
    761.7122007608931, 762.79819141836856, 763.88411556611857, 764.96997335823687,
    766.0557649482239, 767.14149048898844, 768.22715013285199, 769.31274403155123,
    770.39827233624158, 771.48373519749998, 772.56913276532828, 773.65446518915587,
    774.73973261784329, 775.82493519968489, 776.91007308241194, 777.99514641319558,
    779.08015533865012, 780.16510000483515, 781.24998055725951, 782.33479714088344,
    783.41954990012186, 784.50423897884707, 785.58886452039144, 786.67342666755076,
    787.75792556258659, 788.84236134722914, 789.92673416268019, 791.01104414961571,
    792.09529144818862, 793.17947619803169, 794.26359853825977, 795.34765860747302,
    796.43165654375935, 797.51559248469675, 798.59946656735667, 799.68327892830587,
    800.76702970360941, 801.85071902883317, 802.93434703904643, 804.01791386882417,
    805.10141965224989, 806.18486452291836, 807.2682486139372, 808.3515720579303,
    809.43483498703984, 810.51803753292893, 811.60117982678366, 812.68426199931605,
    813.76728418076596, 814.85024650090384, 815.93314908903278, 817.01599207399136,
    818.09877558415519, 819.18149974743994, 820.26416469130356, 821.34677054274812,
    822.42931742832241, 823.51180547412446, 824.59423480580301, 825.6766055485607,
    826.75891782715553, 827.84117176590348, 828.92336748868058, 830.00550511892504,
    831.08758477963931, 832.16960659339259, 833.25157068232284, 834.33347716813842,
    835.41532617212101, 836.4971178151269, 837.57885221758977, 838.66052949952223,
    839.74214978051828, 840.82371317975503, 841.90521981599488, 842.98666980758765,
    844.06806327247227, 845.14940032817901, 846.23068109183157, 847.3119056801487,
    848.39307420944647, 849.47418679563998, 850.55524355424541, 851.63624460038204,
    852.717190048774, 853.79808001375227, 854.87891460925619, 855.95969394883616,
    857.04041814565448, 858.12108731248816, 859.20170156172992, 860.28226100539075,
    861.36276575510112, 862.44321592211327, 863.52361161730244, 864.60395295116939,
    865.68424003384155, 866.76447297507514, 867.84465188425645, 868.92477687040446,
    870.0048480421716, 871.08486550784608, 872.16482937535318, 873.24473975225771,
    874.32459674576467, 875.40440046272147, 876.48415100961995, 877.56384849259723,
    878.64349301743778, 879.72308468957544, 880.80262361409439, 881.88210989573099,
    882.96154363887558, 884.04092494757379, 885.12025392552846, 886.19953067610084,
    887.27875530231267, 888.35792790684707, 889.43704859205059, 890.51611745993478,
    891.59513461217728, 892.67410015012399, 893.75301417478988, 894.83187678686102,
    895.91068808669581, 896.98944817432664, 898.06815714946129, 899.14681511148456,
    900.22542215945907, 901.30397839212787, 902.38248390791489, 903.46093880492674,
    904.53934318095412, 905.61769713347348, 906.69600075964797, 907.77425415632911,
    908.85245742005827, 909.93061064706808, 911.00871393328327, 912.08676737432279,
    913.16477106550076, 914.24272510182789, 915.32062957801293, 916.39848458846382,
    917.47629022728927, 918.5540465882998, 919.63175376500931, 920.70941185063646,
    921.78702093810546, 922.86458112004789, 923.94209248880406, 925.01955513642372,
    926.0969691546677, 927.17433463500936, 928.25165166863553, 929.32892034644783,
    930.40614075906387, 931.48331299681888, 932.56043714976647, 933.63751330767991,
    934.71454156005359, 935.79152199610417, 936.86845470477169, 937.94533977472065,
    939.02217729434165, 940.09896735175209, 941.17571003479748, 942.25240543105292,
    943.32905362782367, 944.405654712147, 945.48220877079291, 946.55871589026526,
    947.63517615680314, 948.71158965638176, 949.78795647471384, 950.86427669725049,
    951.94055040918261, 953.01677769544153, 954.09295864070066, 955.16909332937621,
    956.24518184562851, 957.32122427336265, 958.39722069623053, 959.47317119763068,
    960.54907586071022, 961.62493476836562, 962.70074800324392, 963.77651564774351,
    964.85223778401519, 965.92791449396361, 967.00354585924777, 968.07913196128254,
    969.15467288123932, 970.23016870004699, 971.30561949839375, 972.38102535672658,
    973.45638635525404, 974.53170257394572, 975.60697409253419, 976.68220099051575,
    977.75738334715106, 978.83252124146679, 979.90761475225577, 980.98266395807866,
    982.05766893726457, 983.13262976791202, 984.20754652788992, 985.28241929483886,
    986.35724814617117, 987.43203315907283, 988.50677441050379, 989.58147197719916,
    990.65612593567005, 991.73073636220442, 992.80530333286822, 993.87982692350579,
    994.9543072097415, 996.02874426697997, 997.10313817040742, 998.17748899499236,
    999.25179681548605, 1000.3260617064245, 1001.4002837421282, 1002.4744629967036,
    1003.5485995440437, 1004.6226934578291, 1005.6967448115288, 1006.770753678401,
    1007.844720131494, 1008.918644243647, 1009.9925260874908, 1011.066365735449,
    1012.1401632597386, 1013.2139187323708, 1014.2876322251515, 1015.3613038096831,
    1016.4349335573644, 1017.5085215393914, 1018.5820678267588, 1019.6555724902604,
    1020.7290356004895, 1021.8024572278405, 1022.8758374425089, 1023.9491763144929,
    1025.0224739135931, 1026.0957303094144, 1027.1689455713665, 1028.2421197686635,
    1029.3152529703266, 1030.3883452451832, 1031.4613966618685, 1032.5344072888265,
    1033.6073771943099, 1034.6803064463809, 1035.7531951129131, 1036.8260432615909,
    1037.8988509599112, 1038.9716182751833, 1040.0443452745301, 1041.1170320248889,
    1042.1896785930119, 1043.2622850454668, 1044.3348514486383, 1045.4073778687277,
    1046.479864371754, 1047.5523110235551, 1048.6247178897881, 1049.6970850359296,
    1050.7694125272769, 1051.8417004289493, 1052.9139488058868, 1053.9861577228532,
    1055.0583272444353, 1056.1304574350434, 1057.202548358913, 1058.2746000801046,
    1059.3466126625053, 1060.4185861698281, 1061.4905206656138, 1062.562416213231,
    1063.6342728758771, 1064.7060907165785, 1065.7778697981917, 1066.8496101834037,
    1067.9213119347328, 1068.9929751145291, 1070.0645997849751, 1071.1361860080865,
    1072.2077338457125, 1073.2792433595368, 1074.3507146110785, 1075.4221476616913,
    1076.4935425725657, 1077.5648994047294, 1078.6362182190469, 1079.707499076221,
    1080.7787420367929, 1081.8499471611431, 1082.9211145094923, 1083.9922441419012,
    1085.0633361182715, 1086.1343904983469, 1087.205407341713, 1088.2763867077979,
    1089.3473286558738, 1090.4182332450562, 1091.489100534305, 1092.5599305824257,
    1093.6307234480694, 1094.7014791897329, 1095.7721978657603, 1096.8428795343427,
    1097.9135242535192, 1098.9841320811774, 1100.054703075054, 1101.1252372927349,
    1102.1957347916564, 1103.2661956291056, 1104.3366198622202, 1105.4070075479901,
    1106.4773587432576, 1107.5476735047175, 1108.6179518889178, 1109.6881939522607,
    1110.7583997510028, 1111.8285693412554, 1112.8987027789851, 1113.9688001200154,
    1115.0388614200251, 1116.1088867345504, 1117.1788761189855, 1118.2488296285821,
    1119.3187473184505, 1120.3886292435602, 1121.4584754587402, 1122.5282860186794,
    1123.5980609779276, 1124.6678003908953, 1125.7375043118548, 1126.8071727949398,
    1127.8768058941475, 1128.9464036633376, 1130.0159661562332, 1131.0854934264214,
    1132.154985527354, 1133.2244425123479, 1134.2938644345845, 1135.3632513471123,
    1136.4326033028453, 1137.5019203545646, 1138.571202554919, 1139.6404499564244,
    1140.7096626114653, 1141.7788405722949, 1142.8479838910355, 1143.9170926196791,
    1144.9861668100878, 1146.0552065139941, 1147.1242117830013, 1148.1931826685845,
    1149.2621192220909, 1150.3310214947392, 1151.3998895376212, 1152.4687234017026,
    1153.5375231378221, 1154.6062887966921, 1155.6750204289006, 1156.7437180849097,
    1157.8123818150571, 1158.8810116695568, 1159.9496076984981, 1161.018169951848,
    1162.0866984794498, 1163.1551933310247, 1164.2236545561718, 1165.2920822043691,
    1166.3604763249721, 1167.4288369672165, 1168.4971641802174, 1169.5654580129701,
    1170.6337185143498, 1171.701945733113, 1172.7701397178973, 1173.8383005172218,
    1174.9064281794881, 1175.97452275298, 1177.0425842858635, 1178.1106128261895,
    1179.1786084218907, 1180.2465711207849, 1181.314500970574, 1182.3823980188452,
    1183.4502623130702, 1184.5180939006068, 1185.5858928286984, 1186.6536591444756,
    1187.7213928949545, 1188.7890941270393, 1189.8567628875214, 1190.9243992230802,
    1191.9920031802831, 1193.0595748055862, 1194.1271141453349, 1195.1946212457638,
    1196.2620961529972, 1197.3295389130496, 1198.3969495718259, 1199.4643281751221,
    1200.531674768625, 1201.5989893979133, 1202.6662721084576, 1203.7335229456205,
    1204.8007419546577, 1205.8679291807177, 1206.9350846688424, 1208.0022084639672,
    1209.0693006109218, 1210.1363611544302, 1211.2033901391112, 1212.2703876094788,
    1213.3373536099421, 1214.4042881848065, 1215.4711913782733, 1216.5380632344402,
    1217.6049037973016, 1218.6717131107496, 1219.7384912185732, 1220.8052381644595,
    1221.8719539919937, 1222.9386387446593, 1224.0052924658394, 1225.0719151988151,
    1226.1385069867677, 1227.2050678727783, 1228.2715978998278, 1229.3380971107979,
    1230.4045655484711, 1231.4710032555304, 1232.5374102745609, 1233.603786648049,
    1234.6701324183837, 1235.7364476278556, 1236.8027323186584, 1237.868986532889,
    1238.9352103125473, 1240.0014036995369, 1241.0675667356654, 1242.1336994626442,
    1243.1998019220903, 1244.2658741555244, 1245.3319162043729, 1246.3979281099673,
    1247.4639099135459, 1248.5298616562516, 1249.5957833791344, 1250.6616751231513,
    1251.7275369291656, 1252.793368837948, 1253.8591708901774, 1254.9249431264393,
    1255.9906855872284, 1257.0563983129475, 1258.1220813439079, 1259.1877347203299,
    1260.2533584823436, 1261.318952669988, 1262.3845173232125, 1263.4500524818761,
    1264.5155581857489, 1265.5810344745112, 1266.6464813877542, 1267.7118989649807,
    1268.7772872456053, 1269.8426462689536, 1270.9079760742636, 1271.9732767006863,
    1273.0385481872845, 1274.1037905730345, 1275.1690038968256, 1276.2341881974601,
    1277.299343513655, 1278.3644698840403, 1279.4295673471609, 1280.4946359414762,
    1281.5596757053597, 1282.6246866771012, 1283.6896688949046, 1284.7546223968902,
    1285.8195472210937, 1286.884443405467, 1287.9493109878783, 1289.0141500061131,
    1290.0789604978727, 1291.1437425007762, 1292.2084960523596, 1293.2732211900775,
    1294.3379179513015, 1295.4025863733216, 1296.4672264933461, 1297.5318383485021,
    1298.5964219758359, 1299.6609774123121, 1300.7255046948158, 1301.7900038601506,
    1302.8544749450407, 1303.9189179861303, 1304.9833330199838, 1306.0477200830865,
    1307.1120792118443, 1308.1764104425843, 1309.2407138115545, 1310.3049893549255,
    1311.3692371087889, 1312.4334571091583, 1313.4976493919698, 1314.5618139930825,
    1315.6259509482773, 1316.6900602932585, 1317.7541420636539, 1318.8181962950143,
    1319.8822230228145, 1320.9462222824532, 1322.0101941092528, 1323.0741385384608,
    1324.1380556052484, 1325.2019453447122, 1326.2658077918738, 1327.3296429816799,
    1328.3934509490025, 1329.45723172864, 1330.520985355316, 1331.5847118636807,
    1332.6484112883102, 1333.7120836637075, 1334.7757290243026, 1335.8393474044522,
    1336.9029388384401, 1337.9665033604783, 1339.0300410047055, 1340.0935518051888,
    1341.1570357959233, 1342.2204930108328, 1343.2839234837688, 1344.3473272485123,
    1345.4107043387726, 1346.4740547881888, 1347.5373786303287, 1348.6006758986903,
    1349.6639466267009, 1350.7271908477178, 1351.7904085950288, 1352.853599901852,
    1353.9167648013356, 1354.9799033265595, 1356.0430155105337, 1357.1061013861997,
    1358.1691609864311, 1359.2321943440315, 1360.2952014917382, 1361.358182462219,
    1362.4211372880748, 1363.4840660018381, 1364.5469686359747, 1365.609845222883,
    1366.6726957948938, 1367.7355203842724, 1368.7983190232158, 1369.8610917438557,
    1370.9238385782571, 1371.9865595584192, 1373.0492547162753, 1374.1119240836924,
    1375.1745676924729, 1376.2371855743534, 1377.2997777610055, 1378.3623442840358,
    1379.4248851749862, 1380.4874004653341, 1381.5498901864923, 1382.6123543698097,
    1383.6747930465713, 1384.7372062479976, 1385.7995940052463, 1386.861956349411,
    1387.9242933115224, 1388.9866049225479, 1390.0488912133919, 1391.1111522148965,
    1392.173387957841, 1393.235598472942, 1394.2977837908541, 1395.35994394217,
    1396.4220789574208, 1397.4841888670751, 1398.5462737015409, 1399.6083334911641,
    1400.6703682662298, 1401.7323780569625, 1402.794362893525, 1403.8563228060202,
    1404.91825782449, 1405.9801679789166, 1407.0420532992216, 1408.1039138152667,
    1409.1657495568538, 1410.2275605537252, 1411.2893468355642, 1412.3511084319937,
    1413.4128453725787, 1414.4745576868243, 1415.5362454041772, 1416.5979085540255,
    1417.659547165699, 1418.7211612684684, 1419.7827508915473, 1420.8443160640907,
    1421.9058568151956, 1422.9673731739017, 1424.0288651691915, 1425.0903328299892,
    1426.1517761851626, 1427.2131952635223, 1428.2745900938219, 1429.3359607047582,
    1430.3973071249718, 1431.4586293830466, 1432.5199275075104, 1433.5812015268345,
    1434.6424514694352, 1435.7036773636719, 1436.7648792378493, 1437.8260571202159,
    1438.887211038965, 1439.9483410222354, 1441.0094470981101, 1442.0705292946175,
    1443.1315876397312, 1444.1926221613705, 1445.2536328874, 1446.3146198456302,
    1447.375583063817, 1448.4365225696631, 1449.4974383908168, 1450.5583305548728,
    1451.6191990893726, 1452.6800440218037, 1453.7408653796006, 1454.8016631901453,
    1455.8624374807657, 1456.9231882787378, 1457.9839156112844, 1459.0446195055763,
    1460.1052999887311, 1461.1659570878151, 1462.2265908298416, 1463.2872012417727,
    1464.3477883505179, 1465.4083521829357, 1466.4688927658328, 1467.5294101259642,
    1468.5899042900339, 1469.6503752846947, 1470.7108231365487, 1471.7712478721467,
    1472.8316495179888, 1473.8920281005246, 1474.9523836461535, 1476.0127161812243,
    1477.0730257320354, 1478.1333123248357, 1479.1935759858236, 1480.2538167411483,
    1481.3140346169087, 1482.3742296391547, 1483.4344018338866, 1484.4945512270554,
    1485.554677844563, 1486.6147817122621, 1487.6748628559571, 1488.7349213014031,
    1489.7949570743069, 1490.8549702003263, 1491.9149607050715, 1492.9749286141041,
    1494.0348739529375, 1495.0947967470372, 1496.1546970218205, 1497.214574802658,
    1498.2744301148716, 1499.3342629837364, 1500.3940734344797, 1501.4538614922817,
    1502.513627182276, 1503.5733705295484, 1504.6330915591382, 1505.6927902960383,
    1506.7524667651946, 1507.8121209915066, 1508.8717529998273, 1509.9313628149637,
    1510.9909504616764, 1512.0505159646805, 1513.1100593486444, 1514.1695806381915,
    1515.2290798578993, 1516.2885570322994, 1517.3480121858784, 1518.4074453430776,
    1519.466856528293, 1520.5262457658755, 1521.585613080131, 1522.6449584953209,
    1523.7042820356612, 1524.7635837253245, 1525.8228635884375, 1526.8821216490835,
    1527.9413579313014, 1529.0005724590853, 1530.0597652563863, 1531.1189363471108,
    1532.1780857551216, 1533.2372135042381, 1534.2963196182359, 1535.3554041208467,
    1536.4144670357598, 1537.4735083866203, 1538.5325281970308, 1539.5915264905507,
    1540.6505032906964, 1541.7094586209414, 1542.7683925047168, 1543.8273049654108,
    1544.8861960263696, 1545.9450657108964, 1547.0039140422523, 1548.0627410436568,
    1549.1215467382867, 1550.1803311492772, 1551.2390942997217, 1552.2978362126712,
    1553.3565569111361, 1554.4152564180845, 1555.4739347564432, 1556.5325919490983,
    1557.5912280188941, 1558.6498429886337, 1559.7084368810797, 1560.7670097189534,
    1561.8255615249357, 1562.884092321666, 1563.9426021317443, 1565.0010909777288,
    1566.0595588821386, 1567.1180058674518, 1568.1764319561059, 1569.2348371704995,
    1570.2932215329902, 1571.3515850658962, 1572.4099277914956, 1573.4682497320273,
    1574.5265509096901, 1575.5848313466436, 1576.6430910650079, 1577.7013300868637,
    1578.759548434253, 1579.817746129178, 1580.8759231936024, 1581.934079649451,
    1582.9922155186093, 1584.0503308229249, 1585.1084255842061, 1586.1664998242227,
    1587.2245535647066, 1588.2825868273508, 1589.3405996338104, 1590.3985920057023,
    1591.4565639646055, 1592.5145155320606, 1593.5724467295709, 1594.6303575786014,
    1595.6882481005796, 1596.7461183168959, 1597.8039682489025, 1598.8617979179146,
    1599.9196073452101, 1600.9773965520294, 1602.0351655595762, 1603.0929143890166,
    1604.1506430614807, 1605.2083515980605, 1606.2660400198122, 1607.3237083477552,
    1608.3813566028718, 1609.4389848061082, 1610.4965929783746, 1611.5541811405437,
    1612.6117493134532, 1613.6692975179039, 1614.7268257746609, 1615.7843341044534,
    1616.8418225279743, 1617.8992910658812, 1618.9567397387955, 1620.0141685673036,
    1621.0715775719557, 1622.1289667732672, 1623.1863361917176, 1624.2436858477513,
    1625.3010157617775, 1626.3583259541708, 1627.4156164452697, 1628.472887255379,
    1629.5301384047677, 1630.5873699136703, 1631.6445818022869, 1632.7017740907825,
    1633.7589467992882, 1634.8160999479001, 1635.8732335566804, 1636.9303476456564,
    1637.9874422348221, 1639.0445173441365, 1640.1015729935252, 1641.1586092028797,
    1642.2156259920573, 1643.2726233808819, 1644.3296013891438, 1645.3865600365991,
    1646.4434993429709, 1647.5004193279485, 1648.5573200111883, 1649.6142014123127,
    1650.6710635509114, 1651.7279064465408, 1652.7847301187244, 1653.8415345869519,
    1654.8983198706815, 1655.955085989337, 1657.0118329623108, 1658.0685608089618,
    1659.1252695486166, 1660.1819592005693, 1661.2386297840812, 1662.2952813183815,
    1663.3519138226675, 1664.4085273161036, 1665.4651218178221, 1666.5216973469237,
    1667.578253922477, 1668.6347915635181, 1669.6913102890521, 1670.7478101180518,
    1671.8042910694583, 1672.8607531621813, 1673.9171964150987, 1674.9736208470572,
    1676.0300264768721, 1677.0864133233272, 1678.1427814051749, 1679.1991307411367,
    1680.2554613499028, 1681.3117732501328, 1682.3680664604547, 1683.424340999466,
    1684.4805968857333, 1685.5368341377923, 1686.5930527741482, 1687.6492528132756,
    1688.7054342736185, 1689.7615971735904, 1690.8177415315743, 1691.8738673659234,
    1692.9299746949598, 1693.9860635369762, 1695.0421339102347, 1696.0981858329676,
    1697.154219323377, 1698.2102343996353, 1699.2662310798848, 1700.3222093822387,
    1701.3781693247795, 1702.4341109255606, 1703.4900342026062, 1704.5459391739103,
    1705.6018258574377, 1706.657694271124, 1707.7135444328753, 1708.7693763605689,
    1709.8251900720522, 1710.8809855851443, 1711.9367629176345, 1712.9925220872838,
    1714.0482631118239, 1715.1039860089577, 1716.1596907963597, 1717.2153774916751,
    1718.2710461125209, 1719.3266966764854, 1720.3823292011284, 1721.4379437039813,
    1722.4935402025469, 1723.5491187143, 1724.6046792566872, 1725.6602218471264,
    1726.7157465030079, 1727.7712532416936, 1728.8267420805178, 1729.8822130367862,
    1730.9376661277774, 1731.9931013707419, 1733.0485187829022, 1734.1039183814532,
    1735.1593001835627, 1736.2146642063701, 1737.270010466988, 1738.3253389825015,
    1739.3806497699677, 1740.4359428464172, 1741.4912182288526, 1742.5464759342501,
    1743.6017159795583, 1744.6569383816986, 1745.7121431575656, 1746.7673303240272,
    1747.822499897924, 1748.8776518960699, 1749.9327863352521, 1750.9879032322312,
    1752.0430026037407, 1753.0980844664882, 1754.153148837154, 1755.2081957323928,
    1756.2632251688322, 1757.3182371630735, 1758.3732317316922, 1759.4282088912369,
    1760.4831686582304, 1761.5381110491696, 1762.5930360805251, 1763.647943768741,
    1764.7028341302364, 1765.7577071814039, 1766.8125629386104, 1767.867401418197,
    1768.9222226364791, 1769.9770266097464, 1771.0318133542632, 1772.0865828862682,
    1773.141335221974, 1774.196070377569, 1775.2507883692147, 1776.3054892130485,
    1777.360172925182, 1778.4148395217019, 1779.469489018669, 1780.52412143212,
    1781.5787367780658, 1782.6333350724926, 1783.6879163313617, 1784.7424805706094,
    1785.7970278061473, 1786.8515580538619, 1787.9060713296153, 1788.9605676492449,
    1790.0150470285637, 1791.0695094833593, 1792.1239550293956, 1793.1783836824118,
    1794.2327954581228, 1795.2871903722189, 1796.3415684403662, 1797.3959296782068,
    1798.450274101358, 1799.504601725414, 1800.5589125659437, 1801.613206638493,
    1802.6674839585833, 1803.7217445417116, 1804.7759884033521, 1805.8302155589547,
    1806.884426023945, 1807.9386198137254, 1808.9927969436749, 1810.0469574291483,
    1811.1011012854769, 1812.155228527969, 1813.2093391719088, 1814.2634332325572,
    1815.3175107251523, 1816.3715716649078, 1817.4256160670154, 1818.4796439466429,
    1819.5336553189345, 1820.5876501990122, 1821.6416286019742, 1822.6955905428961,
    1823.7495360368302, 1824.8034650988066, 1825.8573777438314, 1826.9112739868885,
    1827.9651538429393, 1829.0190173269218, 1830.0728644537521, 1831.1266952383228,
    1832.1805096955045, 1833.234307840145, 1834.2880896870699, 1835.3418552510821,
    1836.3956045469622, 1837.4493375894683, 1838.5030543933362, 1839.55675497328,
    1840.6104393439909, 1841.664107520138, 1842.7177595163691, 1843.7713953473087,
    1844.8250150275601, 1845.8786185717045, 1846.9322059943013, 1847.9857773098872,
    1849.0393325329785, 1850.0928716780681, 1851.1463947596287, 1852.19990179211,
    1853.2533927899408, 1854.306867767528, 1855.3603267392573, 1856.4137697194924,
    1857.4671967225759, 1858.5206077628286, 1859.5740028545504, 1860.6273820120193,
    1861.6807452494927, 1862.7340925812059, 1863.7874240213739, 1864.8407395841898,
    1865.894039283826, 1866.9473231344339, 1868.0005911501432, 1869.0538433450633,
    1870.1070797332829, 1871.160300328869, 1872.2135051458679, 1873.2666941983057,
    1874.319867500187, 1875.3730250654964, 1876.426166908197, 1877.479293042232,
    1878.5324034815235, 1879.5854982399735, 1880.6385773314628, 1881.6916407698525,
    1882.7446885689831, 1883.7977207426738, 1884.8507373047253, 1885.903738268916,
    1886.9567236490052, 1888.0096934587318, 1889.0626477118149, 1890.1155864219522,
    1891.1685096028227, 1892.2214172680845, 1893.2743094313762, 1894.3271861063158,
    1895.3800473065023, 1896.4328930455142, 1897.48572333691, 1898.5385381942285,
    1899.5913376309895, 1900.6441216606918, 1901.6968902968156, 1902.7496435528205,
    1903.8023814421476, 1904.8551039782176, 1905.9078111744318, 1906.9605030441724,
    1908.0131796008015, 1909.0658408576628, 1910.1184868280793, 1911.1711175253561,
    1912.2237329627776, 1913.27633315361, 1914.3289181111002, 1915.3814878484754,
    1916.434042378944, 1917.4865817156951, 1918.539105871899, 1919.5916148607071,
    1920.6441086952511, 1921.696587388645, 1922.7490509539823, 1923.8014994043392,
    1924.8539327527719, 1925.9063510123187, 1926.9587541959984, 1928.0111423168116,
    1929.0635153877402, 1930.1158734217468, 1931.1682164317763, 1932.2205444307547,
    1933.2728574315893, 1934.325155447169, 1935.3774384903645, 1936.4297065740275,
    1937.4819597109922, 1938.5341979140737, 1939.5864211960691, 1940.6386295697569,
    1941.6908230478982, 1942.7430016432349, 1943.7951653684916, 1944.8473142363741,
    1945.8994482595706, 1946.9515674507511, 1948.0036718225672, 1949.0557613876531,
    1950.1078361586251, 1951.1598961480806, 1952.2119413686007, 1953.2639718327473,
    1954.315987553065, 1955.3679885420811, 1956.4199748123042, 1957.471946376226,
    1958.5239032463203, 1959.575845435043, 1960.6277729548331, 1961.679685818111,
    1962.7315840372808, 1963.7834676247282, 1964.8353365928217, 1965.8871909539125,
    1966.9390307203346, 1967.9908559044038, 1969.04266651842, 1970.0944625746642,
    1971.1462440854016, 1972.1980110628792, 1973.2497635193274, 1974.3015014669591,
    1975.3532249179702, 1976.4049338845396, 1977.4566283788292, 1978.5083084129835,
    1979.5599739991308, 1980.6116251493816, 1981.6632618758299, 1982.7148841905528,
    1983.7664921056107, 1984.8180856330468, 1985.8696647848878, 1986.921229573144,
    1987.972780009808, 1989.0243161068568, 1990.0758378762498, 1991.1273453299307,
    1992.1788384798258, 1993.2303173378455, 1994.2817819158834, 1995.3332322258163,
    1996.3846682795049, 1997.4360900887939, 1998.4874976655105, 1999.5388910214665,
    2000.5902701684572, 2001.6416351182611, 2002.6929858826411, 2003.7443224733433,
    2004.795644902098, 2005.846953180619, 2006.8982473206045, 2007.9495273337359,
    2009.0007932316792, 2010.0520450260835, 2011.1032827285826, 2012.1545063507945,
    2013.2057159043204, 2014.256911400746, 2015.3080928516415, 2016.3592602685605,
    2017.4104136630413, 2018.4615530466062, 2019.512678430762, 2020.5637898269993,
    2021.6148872467934, 2022.6659707016033, 2023.7170402028732, 2024.768095762031,
    2025.8191373904897, 2026.8701650996459, 2027.9211789008809, 2028.9721788055613,
    2030.0231648250372, 2031.0741369706436, 2032.1250952537002, 2033.1760396855116,
    2034.2269702773663, 2035.2778870405382, 2036.3287899862851, 2037.3796791258505,
    2038.4305544704621, 2039.4814160313322, 2040.5322638196583, 2041.5830978466226,
    2042.6339181233925, 2043.6847246611198, 2044.7355174709412, 2045.7862965639792,
    2046.83706195134, 2047.8878136441162, 2048.9385516533844, 2049.9892759902064,
    2051.0399866656298, 2052.0906836906865, 2053.1413670763945, 2054.1920368337555,
    2055.2426929737585, 2056.2933355073756, 2057.3439644455652, 2058.3945797992719,
    2059.4451815794237, 2060.4957697969353, 2061.5463444627062, 2062.5969055876221,
    2063.6474531825529, 2064.6979872583547, 2065.7485078258692, 2066.7990148959234,
    2067.8495084793299, 2068.899988586887, 2069.9504552293779, 2071.0009084175726,
    2072.0513481622256, 2073.1017744740775, 2074.1521873638553, 2075.2025868422711,
    2076.2529729200219, 2077.3033456077924, 2078.3537049162514, 2079.4040508560547,
    2080.4543834378433, 2081.5047026722441, 2082.5550085698706, 2083.605301141321,
    2084.6555803971805, 2085.7058463480203, 2086.7560990043971, 2087.806338376854,
    2088.8565644759196, 2089.9067773121096, 2090.956976895925, 2092.0071632378535,
    2093.0573363483682, 2094.1074962379289, 2095.1576429169818, 2096.2077763959596,
    2097.2578966852802, 2098.3080037953487, 2099.3580977365559, 2100.4081785192802,
    2101.4582461538848, 2102.5083006507202, 2103.5583420201228, 2104.6083702724163,
    2105.6583854179103, 2106.7083874669006, 2107.7583764296701, 2108.8083523164878,
    2109.8583151376101, 2110.9082649032789, 2111.9582016237237, 2113.0081253091594,
    2114.0580359697892, 2115.1079336158014, 2116.1578182573726, 2117.2076899046647,
    2118.2575485678271, 2119.3073942569963, 2120.3572269822944, 2121.4070467538322,
    2122.4568535817057, 2123.5066474759983, 2124.556428446781, 2125.6061965041108,
    2126.6559516580319, 2127.7056939185754, 2128.7554232957605, 2129.8051397995919,
    2130.8548434400623, 2131.9045342271506, 2132.9542121708241, 2134.0038772810362,
    2135.0535295677278, 2136.1031690408272, 2137.1527957102489, 2138.2024095858965,
    2139.2520106776583, 2140.3015989954129, 2141.3511745490232, 2142.400737348341,
    2143.4502874032059, 2144.4998247234435, 2145.5493493188678, 2146.5988611992793,
    2147.6483603744673, 2148.697846854207, 2149.7473206482618, 2150.796781766383,
    2151.8462302183088, 2152.8956660137651, 2153.9450891624656, 2154.994499674111,
    2156.0438975583897, 2157.0932828249788, 2158.1426554835416, 2159.1920155437301,
    2160.2413630151837, 2161.2906979075287, 2162.3400202303806, 2163.3893299933416,
    2164.4386272060019, 2165.48791187794, 2166.5371840187208, 2167.5864436378993,
    2168.6356907450167, 2169.6849253496025, 2170.734147461174, 2171.7833570892362,
    2172.8325542432831, 2173.8817389327955, 2174.9309111672433, 2175.9800709560827,
    2177.0292183087604, 2178.0783532347086, 2179.1274757433494, 2180.1765858440922,
    2181.2256835463349, 2182.2747688594627, 2183.3238417928505, 2184.3729023558599,
    2185.4219505578412, 2186.4709864081333, 2187.5200099160629, 2188.5690210909452,
    2189.6180199420842, 2190.6670064787704, 2191.7159807102848, 2192.7649426458956,
    2193.8138922948592, 2194.862829666421, 2195.9117547698152, 2196.960667614263,
    2198.009568208975, 2199.0584565631502, 2200.1073326859764, 2201.156196586629,
    2202.2050482742729, 2203.253887758061, 2204.3027150471348, 2205.3515301506245,
    2206.4003330776486, 2207.4491238373153, 2208.4979024387203, 2209.5466688909478,
    2210.5954232030722, 2211.6441653841553, 2212.6928954432478, 2213.7416133893894,
    2214.7903192316089, 2215.8390129789232, 2216.8876946403379, 2217.9363642248486,
    2218.9850217414387, 2220.0336671990804, 2221.0823006067358, 2222.1309219733548,
    2223.1795313078769, 2224.2281286192306, 2225.2767139163325, 2226.3252872080889,
    2227.373848503395, 2228.4223978111349, 2229.4709351401825, 2230.5194604993994,
    2231.5679738976369, 2232.6164753437361, 2233.6649648465259, 2234.7134424148257,
    2235.7619080574427, 2236.8103617831744, 2237.8588036008068, 2238.9072335191154,
    2239.9556515468653, 2241.0040576928095, 2242.0524519656915, 2243.1008343742442,
    2244.1492049271892, 2245.1975636332372, 2246.2459105010889, 2247.2942455394341,
    2248.342568756952, 2249.3908801623111, 2250.4391797641688, 2251.4874675711731,
    2252.5357435919609, 2253.584007835158, 2254.6322603093804, 2255.6805010232338,
    2256.7287299853119, 2257.7769472042, 2258.8251526884719, 2259.8733464466909,
    2260.9215284874094, 2261.9696988191708, 2263.0178574505076, 2264.0660043899406,
    2265.1141396459825, 2266.1622632271342, 2267.2103751418867, 2268.2584753987203,
    2269.3065640061054, 2270.3546409725027, 2271.4027063063613, 2272.4507600161219,
    2273.4988021102131, 2274.5468325970546, 2275.5948514850556, 2276.6428587826149,
    2277.6908544981211, 2278.7388386399534, 2279.7868112164801, 2280.8347722360604,
    2281.882721707042, 2282.9306596377642, 2283.9785860365546, 2285.026500911732,
    2286.0744042716046, 2287.1222961244707, 2288.1701764786194, 2289.2180453423289,
    2290.2659027238678, 2291.3137486314949, 2292.3615830734584, 2293.4094060579982,
    2294.4572175933426, 2295.5050176877107, 2296.5528063493125, 2297.6005835863475,
    2298.6483494070048, 2299.696103819465, 2300.7438468318983, 2301.7915784524648,
    2302.8392986893155, 2303.8870075505911, 2304.9347050444235, 2305.982391178934,
    2307.0300659622344, 2308.0777294024274, 2309.1253815076057, 2310.1730222858519,
    2311.22065174524, 2312.2682698938333, 2313.3158767396867, 2314.363472290845,
    2315.4110565553428, 2316.4586295412068, 2317.506191256452, 2318.5537417090859,
    2319.6012809071053, 2320.6488088584983, 2321.6963255712431, 2322.7438310533084,
    2323.791325312654, 2324.8388083572299, 2325.8862801949767, 2326.9337408338261,
    2327.9811902816991, 2329.0286285465095, 2330.0760556361602, 2331.1234715585447,
    2332.1708763215483, 2333.2182699330465, 2334.2656524009053, 2335.3130237329819,
    2336.360383937124, 2337.4077330211694, 2338.4550709929485, 2339.5023978602803,
    2340.5497136309768, 2341.5970183128397, 2342.6443119136607, 2343.6915944412244,
    2344.7388659033049, 2345.7861263076675, 2346.8333756620682, 2347.8806139742546,
    2348.9278412519652, 2349.9750575029284, 2351.0222627348644, 2352.0694569554848,
    2353.1166401724913, 2354.1638123935772, 2355.2109736264265, 2356.2581238787147,
    2357.3052631581077, 2358.3523914722637, 2359.3995088288302, 2360.4466152354476,
    2361.4937106997459, 2362.5407952293476, 2363.5878688318653, 2364.6349315149032,
    2365.6819832860569, 2366.7290241529131, 2367.7760541230496, 2368.8230732040347,
    2369.8700814034291, 2370.9170787287849, 2371.9640651876439, 2373.0110407875409,
    2374.0580055360006, 2375.1049594405404, 2376.1519025086677, 2377.1988347478823,
    2378.2457561656747, 2379.2926667695269, 2380.3395665669123, 2381.3864555652958,
    2382.4333337721337, 2383.4802011948736, 2384.527057840955, 2385.5739037178078,
    2386.6207388328544, 2387.6675631935086, 2388.7143768071746, 2389.7611796812498,
    2390.8079718231215, 2391.8547532401699, 2392.9015239397654, 2393.9482839292709,
    2394.9950332160411, 2396.0417718074214, 2397.0884997107496, 2398.1352169333541,
    2399.1819234825557, 2400.2286193656673, 2401.2753045899922, 2402.3219791628267,
    2403.3686430914577, 2404.4152963831639, 2405.4619390452167, 2406.508571084878,
    2407.5551925094019, 2408.6018033260352, 2409.6484035420144, 2410.69499316457,
    2411.7415722009223, 2412.7881406582851, 2413.8346985438625, 2414.8812458648517,
    2415.9277826284415, 2416.9743088418118, 2418.0208245121344, 2419.0673296465743,
    2420.113824252287, 2421.1603083364207, 2422.2067819061149, 2423.2532449685013,
    2424.2996975307037, 2425.3461395998379, 2426.3925711830111, 2427.4389922873238,
    2428.4854029198664, 2429.5318030877233, 2430.5781927979697, 2431.624572057673,
    2432.6709408738939, 2433.717299253683, 2434.7636472040845, 2435.8099847321346,
    2436.856311844861, 2437.9026285492832, 2438.9489348524144, 2439.9952307612584,
    2441.0415162828122, 2442.0877914240632, 2443.1340561919933, 2444.1803105935751,
    2445.2265546357735, 2446.2727883255461, 2447.3190116698429, 2448.3652246756051,
    2449.4114273497667, 2450.4576196992543, 2451.5038017309867, 2452.5499734518739,
    2453.5961348688197, 2454.6422859887193, 2455.6884268184608, 2456.7345573649236,
    2457.7806776349807, 2458.8267876354967, 2459.872887373328, 2460.9189768553251,
    2461.9650560883297, 2463.0111250791756, 2464.0571838346896, 2465.1032323616905,
    2466.1492706669906, 2467.1952987573932, 2468.2413166396955, 2469.2873243206855,
    2470.3333218071448, 2471.3793091058474, 2472.4252862235599, 2473.4712531670402,
    2474.5172099430411, 2475.5631565583053, 2476.6090930195701, 2477.6550193335643,
    2478.700935507009, 2479.7468415466192, 2480.7927374591013, 2481.8386232511543,
    2482.8844989294707, 2483.9303645007353, 2484.9762199716251, 2486.02206534881,
    2487.0679006389523, 2488.1137258487079, 2489.1595409847241, 2490.2053460536422,
    2491.251141062095, 2492.2969260167088, 2493.3427009241027, 2494.3884657908875,
    2495.4342206236679, 2496.4799654290414, 2497.5257002135968, 2498.5714249839175,
    2499.6171397465791, 2500.6628445081492, 2501.7085392751887, 2502.7542240542521,
    2503.7998988518857, 2504.8455636746294, 2505.8912185290151, 2506.9368634215684,
    2507.9824983588078, 2509.0281233472438, 2510.0737383933806, 2511.1193435037153,
    2512.1649386847375, 2513.2105239429297, 2514.256099284768, 2515.301664716721,
    2516.3472202452504, 2517.3927658768102, 2518.438301617849, 2519.4838274748067,
    2520.5293434541172, 2521.574849562207, 2522.6203458054961, 2523.6658321903969,
    2524.7113087233151, 2525.7567754106499, 2526.8022322587931, 2527.8476792741294,
    2528.8931164630371, 2529.9385438318877, 2530.9839613870454, 2532.0293691348675,
    2533.0747670817045, 2534.1201552339003, 2535.1655335977921, 2536.2109021797096,
    2537.256260985976, 2538.3016100229079, 2539.3469492968147, 2540.3922788140003,
    2541.4375985807592, 2542.4829086033819, 2543.5282088881504, 2544.573499441341,
    2545.618780269222, 2546.6640513780567, 2547.7093127741, 2548.7545644636007,
    2549.7998064528019, 2550.8450387479379, 2551.8902613552386, 2552.935474280926,
    2553.980677531215, 2555.0258711123151, 2556.0710550304284, 2557.1162292917502,
    2558.1613939024701, 2559.2065488687699, 2560.2516941968256, 2561.2968298928063,
    2562.3419559628751, 2563.3870724131875, 2564.4321792498931, 2565.4772764791351,
    2566.5223641070497, 2567.5674421397666, 2568.6125105834099, 2569.6575694440953,
    2570.7026187279344, 2571.7476584410297, 2572.7926885894799, 2573.837709179375,
    2574.8827202168, 2575.927721707832, 2576.9727136585439, 2578.0176960749995,
    2579.0626689632586, 2580.1076323293723, 2581.1525861793875, 2582.1975305193437,
    2583.242465355273, 2584.2873906932027, 2585.3323065391533, 2586.3772128991386,
    2587.4221097791665, 2588.4669971852377, 2589.5118751233476, 2590.5567435994849,
    2591.6016026196316, 2592.6464521897642, 2593.691292315852, 2594.7361230038587,
    2595.7809442597418, 2596.8257560894517, 2597.8705584989334, 2598.9153514941249,
    2599.9601350809589, 2601.0049092653612, 2602.0496740532517, 2603.0944294505434,
    2604.1391754631441, 2605.1839120969548, 2606.2286393578706, 2607.27335725178,
    2608.318065784566, 2609.3627649621044, 2610.4074547902665, 2611.4521352749157,
    2612.4968064219106, 2613.5414682371029, 2614.5861207263383, 2615.6307638954563,
    2616.6753977502913, 2617.7200222966703, 2618.7646375404152, 2619.8092434873411,
    2620.853840143257, 2621.8984275139674, 2622.9430056052684, 2623.9875744229512,
    2625.0321339728021, 2626.0766842605994, 2627.1212252921164, 2628.1657570731209,
    2629.2102796093732, 2630.2547929066295, 2631.2992969706384, 2632.3437918071436,
    2633.3882774218823, 2634.4327538205862, 2635.47722100898, 2636.521678992784,
    2637.5661277777117, 2638.610567369471, 2639.6549977737632, 2640.6994189962843,
    2641.7438310427251, 2642.7882339187695, 2643.832627630095, 2644.877012182375,
    2645.9213875812757, 2646.9657538324582, 2648.0101109415768, 2649.0544589142814,
    2650.0987977562149, 2651.1431274730148, 2652.1874480703127, 2653.2317595537347,
    2654.2760619289011, 2655.3203552014256, 2656.3646393769172, 2657.4089144609788,
    2658.4531804592075, 2659.4974373771947, 2660.5416852205253, 2661.5859239947799,
    2662.6301537055328, 2663.674374358352, 2664.7185859588003, 2665.7627885124348,
    2666.806982024807, 2667.8511665014621, 2668.8953419479412, 2669.9395083697777,
    2670.9836657725009, 2672.0278141616336, 2673.0719535426933, 2674.1160839211916,
    2675.1602053026354, 2676.2043176925245, 2677.2484210963544, 2678.2925155196144,
    2679.3366009677879, 2680.3806774463542, 2681.4247449607847, 2682.4688035165473,
    2683.5128531191031, 2684.5568937739081, 2685.6009254864134, 2686.6449482620633,
    2687.6889621062974, 2688.7329670245499, 2689.7769630222483, 2690.8209501048163,
    2691.864928277671, 2692.9088975462241, 2693.9528579158828, 2694.996809392047,
    2696.0407519801133, 2697.0846856854705, 2698.1286105135041, 2699.1725264695933,
    2700.216433559111, 2701.2603317874264, 2702.3042211599022, 2703.3481016818955,
    2704.3919733587586, 2705.435836195838, 2706.4796901984755, 2707.5235353720068,
    2708.5673717217624, 2709.6111992530673, 2710.6550179712417, 2711.6988278816002,
    2712.7426289894515, 2713.7864213000998, 2714.830204818843, 2715.8739795509755,
    2716.9177455017839, 2717.9615026765514, 2719.0052510805549, 2720.0489907190672,
    2721.0927215973543, 2722.136443720678, 2723.1801570942939, 2724.2238617234539,
    2725.2675576134025, 2726.3112447693811, 2727.3549231966249, 2728.3985929003629,
    2729.4422538858207, 2730.4859061582179, 2731.5295497227685, 2732.5731845846813,
    2733.6168107491608, 2734.6604282214053, 2735.7040370066088, 2736.7476371099597,
    2737.791228536641, 2738.8348112918306, 2739.8783853807017, 2740.9219508084225,
    2741.9655075801552, 2743.0090557010572, 2744.0525951762811, 2745.0961260109743,
    2746.1396482102787, 2747.1831617793318, 2748.2266667232657, 2749.270163047207,
    2750.3136507562772, 2751.3571298555939, 2752.4006003502682, 2753.4440622454067,
    2754.4875155461118, 2755.5309602574794, 2756.5743963846007, 2757.6178239325632,
    2758.6612429064476, 2759.7046533113307, 2760.748055152284, 2761.7914484343737,
    2762.8348331626617, 2763.8782093422037, 2764.9215769780521, 2765.9649360752528,
    2767.0082866388475, 2768.051628673873, 2769.0949621853611, 2770.138287178338,
    2771.1816036578257, 2772.2249116288408, 2773.2682110963956, 2774.3115020654973,
    2775.3547845411472, 2776.398058528343, 2777.4413240320769, 2778.4845810573361,
    2779.5278296091033, 2780.5710696923561, 2781.6143013120673, 2782.6575244732044,
    2783.7007391807306, 2784.7439454396044, 2785.787143254779, 2786.830332631203,
    2787.8735135738193, 2788.9166860875675, 2789.9598501773817, 2791.0030058481907,
    2792.0461531049186, 2793.0892919524858, 2794.1324223958068, 2795.1755444397913,
    2796.2186580893449, 2797.2617633493678, 2798.3048602247559, 2799.3479487203999,
    2800.3910288411867, 2801.4341005919969, 2802.4771639777073, 2803.5202190031905,
    2804.5632656733133, 2805.6063039929381, 2806.6493339669228, 2807.6923556001207,
    2808.7353688973803, 2809.7783738635449, 2810.8213705034536, 2811.8643588219406,
    2812.9073388238362, 2813.9503105139647, 2814.9932738971465, 2816.0362289781979,
    2817.079175761929, 2818.1221142531467, 2819.165044456653, 2820.2079663772442,
    2821.2508800197133, 2822.2937853888484, 2823.3366824894324, 2824.3795713262434,
    2825.4224519040563, 2826.4653242276399, 2827.5081883017597, 2828.5510441311753,
    2829.5938917206427, 2830.6367310749133, 2831.679562198733, 2832.7223850968444,
    2833.7651997739845, 2834.8080062348863, 2835.8508044842783, 2836.893594526884,
    2837.9363763674237, 2838.9791500106107, 2840.0219154611564, 2841.0646727237659,
    2842.1074218031408, 2843.1501627039775, 2844.1928954309687, 2845.2356199888018,
    2846.2783363821604, 2847.3210446157232, 2848.3637446941648, 2849.4064366221546,
    2850.4491204043579, 2851.4917960454363, 2852.5344635500464, 2853.5771229228394,
    2854.6197741684641, 2855.6624172915631, 2856.7050522967752, 2857.7476791887352,
    2858.7902979720729, 2859.8329086514136, 2860.8755112313788, 2861.9181057165856,
    2862.960692111646, 2864.0032704211685, 2865.0458406497564, 2866.0884028020091,
    2867.1309568825213, 2868.1735028958842, 2869.2160408466834, 2870.2585707395015,
    2871.3010925789158, 2872.343606369499, 2873.3861121158207, 2874.4286098224452,
    2875.4710994939328, 2876.5135811348396, 2877.5560547497171, 2878.5985203431128,
    2879.6409779195692, 2880.683427483626, 2881.7258690398171, 2882.7683025926731,
    2883.8107281467196, 2884.8531457064787, 2885.8955552764673, 2886.9379568611989,
    2887.9803504651823, 2889.0227360929225, 2890.0651137489194, 2891.1074834376695,
    2892.1498451636653, 2893.1921989313942, 2894.2345447453395, 2895.2768826099805,
    2896.3192125297928, 2897.3615345092471, 2898.4038485528108, 2899.4461546649454,
    2900.4884528501098, 2901.5307431127585, 2902.5730254573414, 2903.615299888304,
    2904.6575664100883, 2905.6998250271322, 2906.7420757438686, 2907.7843185647271,
    2908.8265534941324, 2909.8687805365066, 2910.9109996962652, 2911.953210977822,
    2912.9954143855853, 2914.0376099239597, 2915.0797975973455, 2916.1219774101392,
    2917.1641493667325, 2918.2063134715145, 2919.2484697288687, 2920.2906181431754,
    2921.3327587188101, 2922.3748914601447, 2923.4170163715476, 2924.4591334573815,
    2925.5012427220072, 2926.5433441697792, 2927.5854378050503, 2928.6275236321671,
    2929.6696016554738, 2930.7116718793095, 2931.7537343080094, 2932.7957889459058,
    2933.8378357973256, 2934.8798748665922, 2935.9219061580252, 2936.9639296759401,
    2938.0059454246484, 2939.0479534084575, 2940.0899536316711, 2941.1319460985883,
    2942.1739308135047, 2943.2159077807123, 2944.2578770044988, 2945.2998384891475,
    2946.3417922389381, 2947.3837382581469, 2948.4256765510454, 2949.4676071219014,
    2950.5095299749792, 2951.5514451145386, 2952.5933525448363, 2953.6352522701236,
    2954.6771442946497, 2955.7190286226587, 2956.7609052583912, 2957.8027742060835,
    2958.844635469969, 2959.8864890542764, 2960.9283349632301, 2961.9701732010517,
    2963.0120037719589, 2964.0538266801641, 2965.0956419298777, 2966.1374495253049,
    2967.1792494706474, 2968.221041770104, 2969.2628264278678, 2970.3046034481299,
    2971.3463728350762, 2972.3881345928903, 2973.4298887257501, 2974.4716352378309,
    2975.5133741333043, 2976.5551054163375, 2977.5968290910937, 2978.6385451617334,
    2979.6802536324121, 2980.7219545072826, 2981.763647790493, 2982.8053334861879,
    2983.8470115985087, 2984.8886821315923, 2985.9303450895718, 2986.9720004765777,
    2988.013648296735, 2989.0552885541661, 2990.0969212529899, 2991.1385463973202,
    2992.1801639912687, 2993.2217740389428, 2994.2633765444452, 2995.3049715118759,
    2996.3465589453313, 2997.3881388489035, 2998.4297112266813, 2999.4712760827497,
    3000.51283342119, 3001.5543832460794, 3002.5959255614916, 3003.637460371498,
    3004.678987680164, 3005.7205074915528, 3006.7620198097234, 3007.8035246387317,
    3008.8450219826295, 3009.8865118454651, 3010.9279942312824, 3011.9694691441232,
    3013.0109365880244, 3014.05239656702, 3015.093849085139, 3016.1352941464093,
    3017.1767317548524, 3018.2181619144885, 3019.259584629332, 3020.3009999033961,
    3021.3424077406885, 3022.3838081452136, 3023.4252011209733, 3024.4665866719647,
    3025.507964802182, 3026.5493355156154, 3027.5906988162524, 3028.632054708075,
    3029.6734031950641, 3030.7147442811952, 3031.7560779704409, 3032.7974042667706,
    3033.8387231741494, 3034.8800346965395, 3035.9213388378994, 3036.9626356021831,
    3038.0039249933429, 3039.0452070153265, 3040.0864816720773, 3041.1277489675372,
    3042.1690089056428, 3043.2102614903279, 3044.2515067255231, 3045.2927446151548,
    3046.3339751631461, 3047.3751983734169, 3048.4164142498835, 3049.457622796459,
    3050.4988240170524, 3051.540017915569, 3052.5812044959125, 3053.6223837619805,
    3054.6635557176687, 3055.7047203668699, 3056.7458777134716, 3057.7870277613592,
    3058.8281705144145, 3059.869305976516, 3060.9104341515376, 3061.9515550433516,
    3062.9926686558251, 3064.0337749928231, 3065.0748740582062, 3066.1159658558327,
    3067.1570503895559, 3068.1981276632278, 3069.2391976806948, 3070.2802604458011,
    3071.3213159623879, 3072.3623642342923, 3073.4034052653478, 3074.4444390593853,
    3075.4854656202315, 3076.5264849517102, 3077.5674970576424, 3078.6085019418442,
    3079.6494996081301, 3080.6904900603095, 3081.7314733021904, 3082.7724493375754,
    3083.8134181702649, 3084.8543798040564, 3085.895334242743, 3086.9362814901156,
    3087.9772215499602, 3089.0181544260608, 3090.0590801221979, 3091.099998642148,
    3092.140909989685, 3093.1818141685794, 3094.2227111825982, 3095.2636010355054,
    3096.3044837310608, 3097.3453592730216, 3098.3862276651425, 3099.4270889111731,
    3100.4679430148617, 3101.5087899799514, 3102.5496298101839, 3103.5904625092958,
    3104.6312880810219, 3105.6721065290931, 3106.7129178572368, 3107.7537220691784,
    3108.7945191686381, 3109.8353091593344, 3110.8760920449818, 3111.9168678292922,
    3112.9576365159737, 3113.9983981087312, 3115.0391526112671, 3116.0799000272796,
    3117.1206403604638, 3118.1613736145123, 3119.2020997931145, 3120.2428188999552,
    3121.2835309387178, 3122.3242359130818, 3123.3649338267223, 3124.4056246833138,
    3125.4463084865251, 3126.4869852400229, 3127.5276549474715, 3128.5683176125303,
    3129.6089732388568, 3130.6496218301054, 3131.6902633899263, 3132.730897921967,
    3133.7715254298728, 3134.8121459172844, 3135.8527593878403, 3136.8933658451756,
    3137.933965292922, 3138.9745577347085, 3140.0151431741606, 3141.0557216149014,
    3142.0962930605497, 3143.1368575147217, 3144.1774149810312, 3145.2179654630877,
    3146.2585089644986, 3147.2990454888677, 3148.3395750397958, 3149.38009762088,
    3150.4206132357158, 3151.461121887894, 3152.5016235810031, 3153.5421183186286,
    3154.5826061043531, 3155.623086941755, 3156.6635608344109, 3157.7040277858932,
    3158.7444877997727, 3159.7849408796164, 3160.8253870289873, 3161.8658262514468,
    3162.9062585505526, 3163.9466839298593, 3164.9871023929186, 3166.0275139432792,
    3167.0679185844865, 3168.1083163200833, 3169.1487071536089, 3170.1890910886004,
    3171.2294681285907, 3172.2698382771105, 3173.3102015376871, 3174.350557913845,
    3175.3909074091061, 3176.4312500269884, 3177.471585771008, 3178.5119146446764,
    3179.5522366515038, 3180.5925517949963, 3181.6328600786574, 3182.673161505988,
    3183.7134560804857, 3184.7537438056447, 3185.7940246849566, 3186.8342987219107,
    3187.8745659199917, 3188.9148262826834, 3189.9550798134646, 3190.9953265158124,
    3192.035566393201, 3193.0757994491009, 3194.1160256869807, 3195.156245110305,
    3196.1964577225358, 3197.2366635271324, 3198.2768625275512, 3199.3170547272457,
    3200.357240129666, 3201.3974187382596, 3202.4375905564712, 3203.4777555877422,
    3204.517913835512, 3205.5580653032157, 3206.5982099942867, 3207.6383479121555,
    3208.6784790602483, 3209.7186034419897, 3210.7587210608017, 3211.7988319201022,
    3212.8389360233073, 3213.8790333738293, 3214.919123975078, 3215.9592078304609,
    3216.9992849433825, 3218.039355317243, 3219.0794189554417, 3220.1194758613738,
    3221.159526038432, 3222.1995694900065, 3223.2396062194839, 3224.2796362302488,
    3225.3196595256823, 3226.359676109163, 3227.3996859840668, 3228.4396891537663,
    3229.4796856216317, 3230.51967539103, 3231.5596584653258, 3232.5996348478807,
    3233.6396045420529, 3234.6795675511994, 3235.7195238786721, 3236.7594735278226,
    3237.7994165019973, 3238.8393528045422, 3239.8792824387983, 3240.919205408105,
    3241.9591217157986, 3242.9990313652129, 3244.0389343596789, 3245.0788307025241,
    3246.1187203970744, 3247.1586034466518, 3248.1984798545764, 3249.238349624165,
    3250.2782127587316, 3251.3180692615883, 3252.3579191360432, 3253.3977623854025,
    3254.4375990129693, 3255.4774290220444, 3256.5172524159248, 3257.5570691979065,
    3258.5968793712805, 3259.6366829393378, 3260.676479905364, 3261.7162702726432,
    3262.7560540444579, 3263.7958312240853, 3264.8356018148024, 3265.8753658198821,
    3266.9151232425943, 3267.9548740862074, 3268.9946183539864, 3270.0343560491938,
    3271.0740871750886, 3272.1138117349287, 3273.1535297319679, 3274.1932411694579,
    3275.2329460506476, 3276.2726443787828, 3277.3123361571079, 3278.3520213888637,
    3279.3917000772881, 3280.4313722256165, 3281.4710378370819, 3282.5106969149151,
    3283.5503494623426, 3284.5899954825904, 3285.6296349788799, 3286.6692679544317,
    3287.7088944124616, 3288.7485143561844, 3289.7881277888123, 3290.8277347135536,
    3291.8673351336147, 3292.9069290521998, 3293.9465164725098, 3294.9860973977434,
    3296.0256718310966, 3297.0652397757622, 3298.1048012349311, 3299.1443562117911,
    3300.1839047095282, 3301.2234467313247, 3302.262982280361, 3303.3025113598151,
    3304.3420339728614, 3305.3815501226723, 3306.4210598124182, 3307.4605630452656,
    3308.5000598243801, 3309.5395501529229, 3310.5790340340541, 3311.6185114709297,
    3312.6579824667051, 3313.6974470245314, 3314.736905147558, 3315.7763568389314,
    3316.8158021017962, 3317.8552409392928, 3318.8946733545613, 3319.9340993507376,
    3320.9735189309549, 3322.0129320983456, 3323.0523388560377, 3324.0917392071578,
    3325.1311331548291, 3326.1705207021732, 3327.2099018523081, 3328.2492766083506,
    3329.2886449734137, 3330.3280069506086, 3331.3673625430433, 3332.4067117538243,
    3333.4460545860552, 3334.485391042836, 3335.5247211272663, 3336.564044842441,
    3337.6033621914539, 3338.6426731773959, 3339.6819778033555, 3340.7212760724178,
    3341.7605679876674, 3342.7998535521847, 3343.8391327690479, 3344.8784056413328,
    3345.9176721721137, 3346.9569323644605, 3347.9961862214423, 3349.0354337461249,
    3350.0746749415721, 3351.1139098108447, 3352.1531383570014, 3353.1923605830984,
    3354.2315764921891, 3355.2707860873252, 3356.3099893715553, 3357.3491863479253,
    3358.3883770194793, 3359.4275613892592, 3360.466739460303, 3361.505911235648,
    3362.5450767183283, 3363.5842359113749, 3364.6233888178181, 3365.6625354406833,
    3366.7016757829961, 3367.7408098477777, 3368.7799376380476, 3369.8190591568236,
    3370.8581744071193, 3371.8972833919483, 3372.9363861143192, 3373.9754825772402,
    3375.0145727837162, 3376.0536567367494, 3377.0927344393403, 3378.1318058944871,
    3379.1708711051847, 3380.2099300744262, 3381.2489828052026, 3382.2880293005019,
    3383.32706956331, 3384.3661035966106, 3385.405131403385, 3386.4441529866112,
    3387.4831683492657, 3388.5221774943234, 3389.5611804247546, 3390.6001771435299,
    3391.639167653615, 3392.6781519579754, 3393.7171300595728, 3394.7561019613668,
    3395.7950676663154, 3396.8340271773732, 3397.8729804974932, 3398.9119276296265,
    3399.95086857672, 3400.9898033417198, 3402.0287319275699, 3403.067654337211,
    3404.1065705735814, 3405.1454806396182, 3406.184384538255, 3407.2232822724236,
    3408.2621738450539, 3409.3010592590722, 3410.3399385174039, 3411.3788116229716,
    3412.4176785786949, 3413.4565393874923, 3414.4953940522792, 3415.5342425759682,
    3416.5730849614706, 3417.6119212116955, 3418.6507513295487, 3419.6895753179351,
    3420.7283931797551, 3421.7672049179096, 3422.8060105352947, 3423.8448100348055,
    3424.8836034193355, 3425.9223906917737, 3426.9611718550095, 3427.999946911928,
    3429.0387158654125, 3430.0774787183445, 3431.1162354736034, 3432.1549861340654,
    3433.1937307026051, 3434.232469182095, 3435.2712015754046, 3436.309927885402,
    3437.3486481149525, 3438.3873622669189, 3439.4260703441628, 3440.4647723495427,
    3441.5034682859146, 3442.5421581561336, 3443.5808419630507, 3444.6195197095167,
    3445.6581913983782, 3446.6968570324811, 3447.7355166146681, 3448.7741701477803,
    3449.8128176346563, 3450.8514590781324, 3451.8900944810425, 3452.9287238462193,
    3453.9673471764918, 3455.005964474688, 3456.0445757436332, 3457.0831809861506,
    3458.121780205061, 3459.1603734031833, 3460.1989605833332, 3461.2375417483263,
    3462.2761169009741, 3463.314686044087, 3464.3532491804717, 3465.3918063129349,
    3466.4303574442797, 3467.4689025773068, 3468.5074417148162, 3469.545974859604,
    3470.5845020144652, 3471.6230231821919, 3472.6615383655753, 3473.7000475674026,
    3474.738550790461, 3475.7770480375329, 3476.8155393114012, 3477.854024614845,
    3478.8925039506412, 3479.9309773215659, 3480.9694447303918, 3482.0079061798901,
    3483.0463616728289, 3484.0848112119756, 3485.1232548000944, 3486.1616924399473,
    3487.200124134295, 3488.2385498858957, 3489.2769696975051, 3490.3153835718772,
    3491.3537915117631, 3492.3921935199132, 3493.4305895990747, 3494.4689797519927,
    3495.5073639814104, 3496.5457422900695, 3497.5841146807084, 3498.6224811560642,
    3499.6608417188718, 3500.6991963718633, 3501.73754511777, 3502.7758879593198,
    3503.8142248992394, 3504.8525559402533, 3505.890881085083, 3506.929200336449,
    3507.9675136970691, 3509.0058211696592, 3510.0441227569331, 3511.0824184616026,
    3512.1207082863775, 3513.1589922339654, 3514.1972703070714, 3515.2355425083992,
    3516.27380884065, 3517.312069306523, 3518.3503239087154, 3519.3885726499225,
    3520.4268155328373, 3521.465052560151, 3522.5032837345525, 3523.5415090587285,
    3524.5797285353633, 3525.6179421671409, 3526.656149956741, 3527.6943519068432,
    3528.7325480201234, 3529.7707382992562, 3530.8089227469145, 3531.8471013657686,
    3532.8852741584874, 3533.9234411277366, 3534.9616022761811, 3535.9997576064829,
    3537.0379071213029, 3538.0760508232993, 3539.114188715128, 3540.1523207994433,
    3541.1904470788977, 3542.2285675561416, 3543.2666822338224, 3544.3047911145877,
    3545.3428942010801, 3546.3809914959429, 3547.419083001816, 3548.4571687213374,
    3549.4952486571433, 3550.5333228118679, 3551.5713911881435, 3552.6094537886001,
    3553.6475106158659, 3554.685561672567, 3555.7236069613277, 3556.7616464847706,
    3557.799680245515, 3558.8377082461798, 3559.8757304893811, 3560.9137469777329,
    3561.9517577138481, 3562.9897627003365, 3564.0277619398066, 3565.065755434865,
    3566.1037431881155, 3567.1417252021611, 3568.179701479602, 3569.2176720230368,
    3570.255636835062, 3571.2935959182723, 3572.3315492752599, 3573.3694969086164,
    3574.4074388209292, 3575.4453750147864, 3576.4833054927717, 3577.5212302574691,
    3578.5591493114584, 3579.5970626573194, 3580.6349702976286, 3581.6728722349617,
    3582.7107684718912, 3583.7486590109888, 3584.7865438548238, 3585.8244230059631,
    3586.8622964669726, 3587.900164240416, 3588.938026328854, 3589.9758827348473,
    3591.0137334609531, 3592.0515785097273, 3593.0894178837239, 3594.1272515854953,
    3595.1650796175904, 3596.2029019825586, 3597.240718682946, 3598.2785297212959,
    3599.3163351001522, 3600.3541348220547, 3601.3919288895418, 3602.4297173051509,
    3603.4675000714169, 3604.5052771908718, 3605.543048666048, 3606.5808144994735,
    3607.6185746936767, 3608.6563292511819, 3609.6940781745134, 3610.7318214661927,
    3611.7695591287393, 3612.8072911646714, 3613.8450175765047, 3614.882738366754,
    3615.9204535379304, 3616.9581630925454, 3617.9958670331071, 3619.0335653621223,
    3620.0712580820955, 3621.1089451955299, 3622.1466267049263, 3623.184302612784,
    3624.2219729216008, 3625.2596376338715, 3626.2972967520905, 3627.3349502787487,
    3628.3725982163364, 3629.410240567342, 3630.4478773342521, 3631.48550851955,
    3632.523134125719, 3633.5607541552395, 3634.5983686105906, 3635.6359774942493,
    3636.673580808691, 3637.7111785563889, 3638.7487707398145, 3639.7863573614372,
    3640.8239384237258, 3641.861513929146, 3642.8990838801615, 3643.9366482792352,
    3644.9742071288279, 3646.0117604313982, 3647.0493081894028, 3648.0868504052974,
    3649.1243870815351, 3650.1619182205673, 3651.1994438248439, 3652.2369638968125,
    3653.2744784389201, 3654.3119874536101, 3655.3494909433257, 3656.3869889105072,
    3657.4244813575933, 3658.461968287022, 3659.4994497012276, 3660.5369256026447,
    3661.5743959937045, 3662.611860876837, 3663.6493202544702, 3664.6867741290312,
    3665.724222502944, 3666.7616653786313, 3667.7991027585149, 3668.8365346450137,
    3669.8739610405451, 3670.9113819475247, 3671.9487973683672, 3672.9862073054842,
    3674.0236117612862, 3675.0610107381817, 3676.098404238578, 3677.1357922648804,
    3678.173174819492, 3679.2105519048141, 3680.2479235232472, 3681.2852896771888,
    3682.3226503690357, 3683.3600056011828, 3684.397355376022, 3685.4346996959453,
    3686.4720385633418, 3687.5093719805991, 3688.5466999501032, 3689.5840224742378,
    3690.6213395553859, 3691.6586511959276, 3692.6959573982426, 3693.7332581647074,
    3694.7705534976976, 3695.8078433995875, 3696.8451278727484, 3697.8824069195512,
    3698.9196805423635, 3699.9569487435533, 3700.9942115254853, 3702.0314688905223,
    3703.0687208410268, 3704.1059673793584, 3705.1432085078754, 3706.1804442289344,
    3707.2176745448905, 3708.2548994580961, 3709.2921189709032, 3710.3293330856613,
    3711.3665418047185, 3712.4037451304212, 3713.440943065114, 3714.4781356111394,
    3715.5153227708388, 3716.552504546552, 3717.5896809406167, 3718.6268519553687,
    3719.6640175931429, 3720.7011778562719, 3721.7383327470866, 3722.7754822679167,
    3723.8126264210896, 3724.8497652089318, 3725.8868986337666, 3726.9240266979182,
    3727.9611494037063, 3728.9982667534505, 3730.0353787494687, 3731.0724853940769,
    3732.1095866895889, 3733.146682638318, 3734.1837732425747, 3735.2208585046687,
    3736.2579384269075, 3737.2950130115964, 3738.3320822610408, 3739.3691461775429,
    3740.4062047634034, 3741.4432580209218, 3742.4803059523961, 3743.5173485601226,
    3744.5543858463948, 3745.5914178135058, 3746.6284444637472, 3747.6654657994077,
    3748.702481822776, 3749.7394925361373, 3750.7764979417771, 3751.8134980419773,
    3752.8504928390198, 3753.8874823351844, 3754.9244665327487, 3755.9614454339894,
    3756.9984190411806, 3758.0353873565959, 3759.072350382507, 3760.1093081211834,
    3761.1462605748934, 3762.1832077459035, 3763.2201496364787, 3764.2570862488824,
    3765.2940175853769, 3766.3309436482214, 3767.3678644396755, 3768.4047799619952,
    3769.4416902174362, 3770.478595208252, 3771.5154949366952, 3772.5523894050157,
    3773.5892786154627, 3774.6261625702837, 3775.6630412717236, 3776.6999147220272,
    3777.7367829234367, 3778.7736458781933, 3779.810503588536, 3780.8473560567022,
    3781.8842032849288, 3782.9210452754496, 3783.9578820304982, 3784.9947135523053,
    3786.0315398431012, 3787.0683609051134, 3788.1051767405693, 3789.1419873516934,
    3790.1787927407095, 3791.2155929098394, 3792.2523878613029, 3793.2891775973194,
    3794.3259621201055, 3795.3627414318771, 3796.3995155348484, 3797.4362844312309,
    3798.4730481232368, 3799.5098066130745, 3800.5465599029521, 3801.5833079950753,
    3802.6200508916495, 3803.6567885948775, 3804.6935211069604, 3805.7302484300985,
    3806.7669705664903, 3807.8036875183325, 3808.8403992878202, 3809.8771058771472,
    3810.9138072885062, 3811.9505035240877, 3812.9871945860805, 3814.0238804766718,
    3815.0605611980486, 3816.097236752395, 3817.1339071418938, 3818.1705723687264,
    3819.2072324350729, 3820.2438873431115, 3821.2805370950191, 3822.3171816929707,
    3823.3538211391406, 3824.3904554357009, 3825.4270845848218, 3826.4637085886729,
    3827.5003274494215, 3828.5369411692345, 3829.5735497502756, 3830.6101531947083,
    3831.6467515046943, 3832.6833446823939, 3833.719932729965, 3834.7565156495648,
    3835.7930934433489, 3836.8296661134714, 3837.8662336620846, 3838.9027960913404,
    3839.939353403387, 3840.9759056003732, 3842.0124526844447, 3843.0489946577477,
    3844.0855315224244, 3845.122063280618, 3846.1585899344682, 3847.195111486114,
    3848.2316279376932, 3849.2681392913419, 3850.304645549194, 3851.3411467133833,
    3852.3776427860412, 3853.4141337692972, 3854.4506196652806, 3855.4871004761176,
    3856.5235762039351, 3857.560046850856, 3858.5965124190034, 3859.6329729104987,
    3860.6694283274614, 3861.7058786720095, 3862.7423239462601, 3863.7787641523282,
    3864.8151992923281, 3865.8516293683715, 3866.8880543825699, 3867.9244743370318,
    3868.9608892338661, 3869.9972990751789, 3871.0337038630751, 3872.0701035996581,
    3873.1064982870307, 3874.1428879272926, 3875.1792725225437, 3876.2156520748817,
    3877.2520265864023, 3878.2883960592007, 3879.3247604953704, 3880.3611198970034,
    3881.3974742661894, 3882.433823605018, 3883.4701679155773, 3884.5065071999525,
    3885.5428414602288, 3886.5791706984892, 3887.6154949168154, 3888.6518141172883,
    3889.688128301987, 3890.724437472988, 3891.7607416323681, 3892.7970407822017,
    3893.8333349245622, 3894.8696240615213, 3895.9059081951496, 3896.9421873275155,
    3897.978461460687, 3899.0147305967294, 3900.0509947377082, 3901.0872538856866,
    3902.1235080427255, 3903.1597572108863, 3904.1960013922276, 3905.2322405888071,
    3906.2684748026804, 3907.3047040359029, 3908.3409282905277, 3909.3771475686067,
    3910.4133618721903, 3911.4495712033277, 3912.4857755640664, 3913.5219749564531,
    3914.558169382532, 3915.594358844347, 3916.6305433439406, 3917.6667228833526,
    3918.7028974646228, 3919.7390670897889, 3920.7752317608879, 3921.8113914799542,
    3922.8475462490214, 3923.8836960701228, 3924.9198409452883, 3925.955980876548,
    3926.9921158659295, 3928.02824591546, 3929.0643710271647, 3930.100491203068,
    3931.1366064451918, 3932.1727167555578, 3933.208822136186, 3934.2449225890941,
    3935.2810181162995, 3936.3171087198184, 3937.353194401665, 3938.3892751638518,
    3939.4253510083904, 3940.4614219372916, 3941.4974879525635, 3942.5335490562143,
    3943.5696052502499, 3944.6056565366748, 3945.6417029174927, 3946.6777443947053,
    3947.7137809703136, 3948.7498126463165, 3949.7858394247123, 3950.8218613074973,
    3951.8578782966674, 3952.8938903942153, 3953.9298976021346, 3954.9658999224162,
    3956.0018973570491, 3957.0378899080229, 3958.0738775773243, 3959.1098603669393,
    3960.1458382788514, 3961.1818113150448, 3962.2177794775007, 3963.2537427681996,
    3964.2897011891205, 3965.3256547422411, 3966.3616034295378, 3967.3975472529855,
    3968.4334862145583, 3969.4694203162285, 3970.5053495599664, 3971.5412739477429,
    3972.5771934815257, 3973.6131081632816, 3974.6490179949765, 3975.6849229785753,
    3976.7208231160407, 3977.7567184093341, 3978.7926088604163, 3979.8284944712464,
    3980.8643752437824, 3981.9002511799799, 3982.9361222817952, 3983.9719885511809,
    3985.0078499900906, 3986.0437066004747, 3987.0795583842832, 3988.1154053434652,
    3989.1512474799674, 3990.1870847957362, 3991.2229172927155, 3992.2587449728494,
    3993.2945678380797, 3994.3303858903469, 3995.3661991315907, 3996.4020075637491,
    3997.4378111887586, 3998.4736100085552, 3999.5094040250729, 4000.5451932402443,
    4001.5809776560018, 4002.6167572742752, 4003.6525320969936, 4004.6883021260842,
    4005.7240673634747, 4006.7598278110891, 4007.7955834708519, 4008.8313343446853,
    4009.8670804345111, 4010.9028217422488, 4011.9385582698173, 4012.9742900191341,
    4014.0100169921152, 4015.0457391906757, 4016.0814566167292, 4017.1171692721882,
    4018.1528771589628, 4019.1885802789639, 4020.2242786340994, 4021.2599722262771,
    4022.295661057402, 4023.3313451293793, 4024.3670244441128, 4025.402699003504,
    4026.438368809454, 4027.474033863863, 4028.5096941686284, 4029.5453497256476,
    4030.5810005368162, 4031.6166466040295, 4032.6522879291806, 4033.6879245141608,
    4034.7235563608615, 4035.759183471172, 4036.794805846981, 4037.8304234901748,
    4038.8660364026396, 4039.9016445862603, 4040.9372480429192, 4041.972846774499,
    4043.0084407828804, 4044.0440300699424, 4045.0796146375637, 4046.1151944876215,
    4047.1507696219915, 4048.1863400425477, 4049.2219057511643, 4050.2574667497124,
    4051.2930230400634, 4052.3285746240867, 4053.3641215036505, 4054.3996636806223,
    4055.4352011568676, 4056.4707339342513, 4057.5062620146364, 4058.5417853998856,
    4059.5773040918593, 4060.6128180924179, 4061.648327403419, 4062.6838320267207,
    4063.7193319641783, 4064.7548272176473, 4065.7903177889807, 4066.8258036800312,
    4067.86128489265, 4068.8967614286867, 4069.9322332899901, 4070.967700478408,
    4072.0031629957862, 4073.03862084397, 4074.0740740248034, 4075.1095225401286,
    4076.1449663917874, 4077.1804055816197, 4078.2158401114648, 4079.25126998316,
    4080.2866951985425, 4081.3221157594471, 4082.3575316677084, 4083.3929429251593,
    4084.4283495336313, 4085.4637514949554, 4086.4991488109604, 4087.5345414834746,
    4088.5699295143249, 4089.6053129053375, 4090.6406916583364, 4091.6760657751456,
    4092.7114352575863, 4093.7468001074808, 4094.7821603266475, 4095.8175159169059,
    4096.8528668800736, 4097.888213217966, 4098.9235549323985, 4099.9588920251845,
    4100.9942244981376, 4102.0295523530685, 4103.0648755917882, 4104.1001942161047,
    4105.1355082278269, 4106.1708176287611, 4107.2061224207127, 4108.2414226054871,
    4109.2767181848858, 4110.3120091607125, 4111.347295534767, 4112.3825773088492,
    4113.4178544847582, 4114.4531270642901, 4115.4883950492431, 4116.5236584414097,
    4117.5589172425853, 4118.5941714545625, 4119.629421079132, 4120.6646661180857,
    4121.6999065732107, 4122.7351424462959, 4123.7703737391294, 4124.8056004534947,
    4125.840822591178, 4126.8760401539612, 4127.9112531436276, 4128.9464615619581,
    4129.9816654107326, 4131.01686469173, 4132.0520594067275, 4133.0872495575013,
    4134.1224351458268, 4135.1576161734783, 4136.1927926422286, 4137.2279645538501,
    4138.2631319101129, 4139.2982947127875, 4140.3334529636404, 4141.3686066644404,
    4142.4037558169539, 4143.4389004229442, 4144.4740404841759, 4145.5091760024125,
    4146.5443069794146, 4147.5794334169423, 4148.6145553167562, 4149.6496726806135,
    4150.6847855102715, 4151.7198938074853, 4152.7549975740103, 4153.790096811601,
    4154.825191522008, 4155.8602817069841, 4156.8953673682781, 4157.93044850764,
    4158.9655251268186, 4160.0005972275585, 4161.0356648116076, 4162.0707278807095,
    4163.1057864366076, 4164.1408404810445, 4165.1758900157611, 4166.2109350424971,
    4167.2459755629925, 4168.2810115789853, 4169.3160430922107, 4170.3510701044052,
    4171.3860926173038, 4172.4211106326393, 4173.4561241521442, 4174.4911331775493,
    4175.5261377105853, 4176.5611377529804, 4177.5961333064624, 4178.6311243727596,
    4179.6661109535953, 4180.7010930506958, 4181.7360706657837, 4182.7710438005824,
    4183.806012456811, 4184.840976636192, 4185.8759363404424, 4186.9108915712804,
    4187.945842330425, 4188.9807886195886, 4190.0157304404884, 4191.050667794837,
    4192.0856006843469, 4193.120529110729, 4194.1554530756939, 4195.1903725809507,
    4196.2252876282073, 4197.2601982191709, 4198.2951043555477, 4199.3300060390411,
    4200.3649032713574, 4201.3997960541965, 4202.4346843892608, 4203.4695682782512,
    4204.5044477228676, 4205.5393227248069, 4206.5741932857663, 4207.6090594074431,
    4208.6439210915314, 4209.6787783397258, 4210.7136311537188, 4211.7484795352029,
    4212.7833234858672, 4213.8181630074032, 4214.8529981014981, 4215.8878287698399,
    4216.9226550141148, 4217.9574768360089, 4218.9922942372059, 4220.02710721939,
    4221.0619157842411, 4222.0967199334427, 4223.1315196686737, 4224.166314991613,
    4225.2011059039387, 4226.2358924073269, 4227.2706745034548, 4228.3054521939966,
    4229.3402254806251, 4230.3749943650146, 4231.4097588488348, 4232.4445189337566,
    4233.4792746214507, 4234.5140259135833, 4235.5487728118242, 4236.5835153178377,
    4237.6182534332893, 4238.6529871598441, 4239.6877164991647, 4240.7224414529128,
    4241.75716202275, 4242.7918782103352, 4243.8265900173283, 4244.8612974453872,
    4245.8960004961682, 4246.9306991713265, 4247.9653934725184, 4249.0000834013963,
    4250.0347689596138, 4251.0694501488215, 4252.1041269706702, 4253.1387994268107,
    4254.1734675188891, 4255.2081312485552, 4256.2427906174535, 4257.2774456272309,
    4258.312096279531, 4259.3467425759973, 4260.3813845182713, 4261.4160221079956,
    4262.4506553468091, 4263.4852842363516, 4264.5199087782612, 4265.5545289741758,
    4266.5891448257298, 4267.6237563345603, 4268.6583635022989, 4269.6929663305809,
    4270.727564821037, 4271.7621589752989, 4272.7967487949954, 4273.8313342817564,
    4274.8659154372099, 4275.9004922629829, 4276.9350647606998, 4277.9696329319877,
    4279.0041967784682, 4280.0387563017657, 4281.0733115035018, 4282.1078623852964,
    4283.14240894877, 4284.1769511955408, 4285.2114891272277, 4286.2460227454467,
    4287.2805520518132, 4288.3150770479424, 4289.3495977354478, 4290.3841141159428,
    4291.4186261910381, 4292.4531339623445, 4293.4876374314726, 4294.5221366000296,
    4295.5566314696252, 4296.5911220418648, 4297.6256083183544, 4298.6600903006984,
    4299.6945679905002, 4300.7290413893634, 4301.7635104988894, 4302.7979753206791,
    4303.8324358563314, 4304.8668921074459, 4305.9013440756198, 4306.9357917624502,
    4307.9702351695323, 4309.0046742984614, 4310.0391091508309, 4311.0735397282333,
    4312.1079660322612, 4313.1423880645043, 4314.1768058265534, 4315.2112193199973,
    4316.2456285464232, 4317.280033507418, 4318.314434204568, 4319.3488306394584,
    4320.3832228136716, 4321.4176107287922, 4322.4519943864007, 4323.4863737880796,
    4324.520748935407, 4325.5551198299645, 4326.5894864733273, 4327.6238488670742,
    4328.6582070127806, 4329.6925609120226, 4330.7269105663727, 4331.7612559774052,
    4332.7955971466918, 4333.829934075804, 4334.8642667663125, 4335.8985952197854,
    4336.9329194377915, 4337.9672394218987, 4339.0015551736733, 4340.0358666946795,
    4341.0701739864835, 4342.1044770506469, 4343.138775888734, 4344.1730705023056,
    4345.2073608929222, 4346.2416470621429, 4347.2759290115273, 4348.3102067426325,
    4349.3444802570166, 4350.3787495562337, 4351.4130146418393, 4352.4472755153865,
    4353.4815321784299, 4354.5157846325201, 4355.5500328792095, 4356.5842769200462,
    4357.6185167565809, 4358.6527523903615, 4359.6869838229341, 4360.7212110558467,
    4361.7554340906436, 4362.7896529288691, 4363.8238675720668, 4364.8580780217799,
    4365.8922842795491, 4366.9264863469143, 4367.960684225417, 4368.9948779165943,
    4370.0290674219859, 4371.0632527431262, 4372.0974338815522, 4373.1316108387991,
    4374.1657836164013, 4375.1999522158903, 4376.2341166387996, 4377.2682768866598,
    4378.3024329610016, 4379.3365848633539, 4380.3707325952455, 4381.4048761582035,
    4382.4390155537549, 4383.473150783424, 4384.507281848737, 4385.5414087512172,
    4386.5755314923872, 4387.6096500737685, 4388.6437644968828, 4389.6778747632497,
    4390.7119808743882, 4391.7460828318171, 4392.7801806370526, 4393.8142742916125,
    4394.8483637970112, 4395.882449154763, 4396.9165303663813, 4397.9506074333794,
    4398.98468035727, 4400.0187491395618, 4401.0528137817655, 4402.08687428539,
    4403.120930651944, 4404.1549828829347, 4405.1890309798673, 4406.2230749442469,
    4407.2571147775798, 4408.2911504813674, 4409.325182057114, 4410.3592095063195,
    4411.3932328304854, 4412.4272520311124, 4413.4612671096984, 4414.4952780677422,
    4415.52928490674, 4416.5632876281879, 4417.597286233583, 4418.6312807244176,
    4419.6652711021861, 4420.699257368381, 4421.7332395244939, 4422.7672175720163,
    4423.8011915124371, 4424.835161347246, 4425.86912707793, 4426.9030887059771,
    4427.9370462328743, 4428.9709996601059, 4430.0049489891562, 4431.0388942215095,
    4432.0728353586492, 4433.106772402055, 4434.1407053532093, 4435.1746342135921,
    4436.208558984682, 4437.2424796679579, 4438.2763962648969, 4439.310308776975,
    4440.3442172056675, 4441.3781215524505, 4442.4120218187973, 4443.4459180061795,
    4444.4798101160704, 4445.5136981499409, 4446.5475821092614, 4447.5814619955008,
    4448.615337810128, 4449.6492095546109, 4450.6830772304147, 4451.7169408390073,
    4452.7508003818521, 4453.7846558604142, 4454.8185072761562, 4455.8523546305405,
    4456.8861979250287, 4457.9200371610814, 4458.9538723401583, 4459.9877034637175,
    4461.0215305332185, 4462.0553535501167, 4463.089172515869, 4464.1229874319315,
    4465.1567982997576, 4466.1906051208016, 4467.224407896515, 4468.2582066283512,
    4469.29200131776, 4470.3257919661928, 4471.3595785750977, 4472.3933611459233,
    4473.4271396801169, 4474.4609141791261, 4475.4946846443963, 4476.5284510773718,
    4477.5622134794967, 4478.5959718522154, 4479.6297261969685, 4480.6634765151994,
    4481.6972228083469, 4482.7309650778525, 4483.7647033251533, 4484.7984375516889,
    4485.8321677588956, 4486.8658939482093, 4487.8996161210671, 4488.9333342789023,
    4489.9670484231492, 4491.0007585552403, 4492.034464676608, 4493.0681667886838,
    4494.1018648928966, 4495.135558990678, 4496.1692490834557, 4497.2029351726569,
    4498.2366172597094, 4499.2702953460393, 4500.303969433071, 4501.3376395222303,
    4502.371305614939, 4503.4049677126222, 4504.4386258166996, 4505.4722799285928,
    4506.5059300497232, 4507.5395761815089, 4508.5732183253685, 4509.6068564827201,
    4510.6404906549806, 4511.6741208435651, 4512.7077470498898, 4513.7413692753689,
    4514.7749875214158, 4515.8086017894429, 4516.8422120808627, 4517.8758183970849,
    4518.909420739521, 4519.9430191095789, 4520.9766135086684, 4522.0102039381964,
    4523.0437903995698, 4524.0773728941949, 4525.1109514234768, 4526.1445259888196,
    4527.1780965916278, 4528.2116632333018, 4529.245225915246, 4530.2787846388592,
    4531.3123394055438, 4532.3458902166967, 4533.3794370737187, 4534.4129799780058,
    4535.4465189309567, 4536.4800539339658, 4537.5135849884282, 4538.54711209574,
    4539.5806352572945, 4540.6141544744833, 4541.6476697486987, 4542.6811810813324,
    4543.714688473774, 4544.7481919274142, 4545.7816914436407, 4546.8151870238407,
    4547.8486786694039, 4548.8821663817134, 4549.9156501621565, 4550.9491300121181,
    4551.9826059329807, 4553.0160779261287, 4554.0495459929425, 4555.0830101348056,
    4556.1164703530967, 4557.1499266491965, 4558.1833790244837, 4559.2168274803371,
    4560.2502720181328, 4561.2837126392487, 4562.3171493450591, 4563.3505821369399,
    4564.3840110162655, 4565.4174359844083, 4566.4508570427406, 4567.484274192635,
    4568.5176874354629, 4569.5510967725932, 4570.5845022053954, 4571.6179037352385,
    4572.6513013634894, 4573.684695091516, 4574.7180849206843, 4575.7514708523586,
    4576.784852887904, 4577.8182310286847, 4578.8516052760624, 4579.8849756314012,
    4580.9183420960599, 4581.9517046714018, 4582.9850633587839, 4584.0184181595678,
    4585.0517690751094, 4586.0851161067676, 4587.1184592558975, 4588.151798523857,
    4589.1851339119994, 4590.218465421679, 4591.2517930542499, 4592.2851168110647,
    4593.3184366934747, 4594.3517527028316, 4595.385064840485, 4596.4183731077856,
    4597.4516775060802, 4598.4849780367185, 4599.5182747010467, 4600.5515675004117,
    4601.5848564361586, 4602.6181415096326, 4603.6514227221778, 4604.6847000751368,
    4605.7179735698528, 4606.7512432076674, 4607.7845089899211, 4608.8177709179536,
    4609.8510289931055, 4610.8842832167147, 4611.9175335901191, 4612.9507801146556,
    4613.9840227916602, 4615.0172616224691, 4616.0504966084163, 4617.0837277508363,
    4618.1169550510622, 4619.1501785104265, 4620.1833981302607, 4621.2166139118954,
    4622.2498258566611, 4623.2830339658858, 4624.3162382409, 4625.3494386830307,
    4626.3826352936048, 4627.4158280739493, 4628.4490170253885, 4629.4822021492473,
    4630.5153834468501, 4631.5485609195202, 4632.58173456858, 4633.614904395351,
    4634.6480704011537, 4635.6812325873098, 4636.7143909551369, 4637.7475455059548,
    4638.7806962410805, 4639.8138431618318, 4640.8469862695247, 4641.8801255654744,
    4642.9132610509969, 4643.9463927274055, 4644.9795205960145, 4646.0126446581344,
    4647.0457649150794, 4648.0788813681593, 4649.1119940186845, 4650.1451028679649,
    4651.1782079173081, 4652.2113091680239, 4653.2444066214193, 4654.2775002788003,
    4655.3105901414729, 4656.3436762107422, 4657.3767584879124, 4658.4098369742878,
    4659.4429116711699, 4660.4759825798619, 4661.5090497016645, 4662.5421130378791,
    4663.5751725898044, 4664.6082283587402, 4665.6412803459843, 4666.6743285528355,
    4667.7073729805898, 4668.740413630544, 4669.7734505039925, 4670.8064836022304,
    4671.8395129265518, 4672.8725384782492, 4673.9055602586159, 4674.9385782689433,
    4675.9715925105229, 4677.0046029846444, 4678.0376096925966, 4679.070612635669,
    4680.1036118151496, 4681.1366072323262, 4682.169598888484, 4683.2025867849106,
    4684.2355709228896, 4685.2685513037059, 4686.3015279286428, 4687.3345007989838,
    4688.3674699160101, 4689.4004352810043, 4690.4333968952469, 4691.4663547600176,
    4692.499308876595, 4693.5322592462589, 4694.5652058702863, 4695.5981487499539,
    4696.6310878865388, 4697.6640232813161, 4698.6969549355617, 4699.7298828505482,
    4700.7628070275505, 4701.7957274678402, 4702.8286441726905, 4703.8615571433711,
    4704.8944663811544, 4705.9273718873092, 4706.9602736631041, 4707.9931717098079,
    4709.0260660286895, 4710.0589566210137, 4711.0918434880487, 4712.1247266310593,
    4713.1576060513098, 4714.1904817500654, 4715.2233537285883, 4716.256221988142,
    4717.2890865299878, 4718.3219473553872, 4719.3548044656009, 4720.3876578618892,
    4721.4205075455102, 4722.4533535177225, 4723.4861957797839, 4724.5190343329523,
    4725.5518691784828, 4726.5847003176304, 4727.6175277516522, 4728.6503514818005,
    4729.6831715093285, 4730.7159878354905, 4731.748800461537, 4732.7816093887204,
    4733.8144146182904, 4734.8472161514983, 4735.8800139895911, 4736.9128081338195,
    4737.9455985854302, 4738.9783853456702, 4740.0111684157855, 4741.0439477970231,
    4742.076723490627, 4743.1094954978425, 4744.1422638199119, 4745.1750284580785,
    4746.2077894135846, 4747.2405466876717, 4748.2733002815803, 4749.306050196551,
    4750.3387964338235, 4751.3715389946356, 4752.4042778802259, 4753.4370130918314,
    4754.4697446306882, 4755.502472498034, 4756.5351966951021, 4757.5679172231276,
    4758.6006340833446, 4759.6333472769866, 4760.6660568052857, 4761.6987626694736,
    4762.7314648707816, 4763.7641634104393, 4764.7968582896783, 4765.8295495097254,
    4766.8622370718103, 4767.8949209771599, 4768.9276012270011, 4769.9602778225608,
    4770.992950765065, 4772.0256200557378, 4773.0582856958035, 4774.0909476864854,
    4775.1236060290066, 4776.1562607245896, 4777.1889117744558, 4778.2215591798249,
    4779.2542029419192, 4780.2868430619556, 4781.3194795411546, 4782.3521123807341,
    4783.3847415819109, 4784.417367145903, 4785.4499890739244, 4786.482607367192,
    4787.5152220269192, 4788.5478330543219, 4789.5804404506125, 4790.6130442170033,
    4791.6456443547058, 4792.6782408649333, 4793.7108337488944, 4794.7434230077997,
    4795.7760086428589, 4796.8085906552806, 4797.8411690462726, 4798.8737438170419,
    4799.9063149687954, 4800.938882502739, 4801.9714464200779, 4803.004006722017,
    4804.0365634097598, 4805.0691164845093, 4806.101665947469, 4807.1342117998402,
    4808.1667540428243, 4809.199292677622, 4810.2318277054337, 4811.2643591274573,
    4812.2968869448923, 4813.3294111589375, 4814.361931770788, 4815.3944487816425,
    4816.426962192696, 4817.4594720051437, 4818.4919782201796, 4819.5244808389998,
    4820.5569798627957, 4821.5894752927607, 4822.621967130086, 4823.6544553759641,
    4824.6869400315854, 4825.7194210981388, 4826.7518985768156, 4827.7843724688028,
    4828.8168427752889, 4829.849309497461, 4830.8817726365069, 4831.9142321936115,
    4832.9466881699609, 4833.9791405667402, 4835.0115893851325, 4836.0440346263222,
    4837.0764762914905, 4838.1089143818217, 4839.1413488984963, 4840.1737798426957,
    4841.2062072155986, 4842.2386310183865, 4843.2710512522362, 4844.3034679183284,
    4845.3358810178388, 4846.3682905519445, 4847.4006965218232, 4848.4330989286491,
    4849.4654977735981, 4850.4978930578445, 4851.5302847825615, 4852.5626729489222,
    4853.5950575581001, 4854.6274386112664, 4855.6598161095908, 4856.6921900542457,
    4857.7245604464006, 4858.7569272872252, 4859.7892905778863, 4860.8216503195536,
    4861.854006513393, 4862.8863591605723, 4863.9187082622575, 4864.9510538196137,
    4865.9833958338049, 4867.0157343059964, 4868.0480692373512, 4869.0804006290318,
    4870.1127284822005, 4871.1450527980196, 4872.1773735776487, 4873.2096908222502,
    4874.2420045329818, 4875.2743147110032, 4876.306621357473, 4877.3389244735481,
    4878.3712240603863, 4879.4035201191446, 4880.4358126509787, 4881.468101657043,
    4882.5003871384924, 4883.5326690964812, 4884.5649475321634, 4885.5972224466896,
    4886.6294938412138, 4887.6617617168868, 4888.6940260748597, 4889.7262869162823,
    4890.7585442423051, 4891.7907980540758, 4892.8230483527423, 4893.8552951394549,
    4894.887538415358, 4895.9197781815992, 4896.9520144393246, 4897.9842471896782,
    4899.016476433806, 4900.0487021728513, 4901.0809244079574, 4902.1131431402673,
    4903.1453583709226, 4904.1775701010656, 4905.2097783318359, 4906.2419830643748,
    4907.2741842998221, 4908.3063820393154, 4909.3385762839944, 4910.3707670349959,
    4911.4029542934577, 4912.4351380605167, 4913.4673183373079, 4914.4994951249673,
    4915.5316684246291, 4916.5638382374273, 4917.5960045644961, 4918.6281674069678,
    4919.6603267659739, 4920.6924826426475, 4921.7246350381183, 4922.7567839535177,
    4923.7889293899743, 4924.8210713486187, 4925.8532098305786, 4926.8853448369819,
    4927.9174763689562, 4928.9496044276275, 4929.9817290141227, 4931.0138501295678,
    4932.0459677750869, 4933.0780819518041, 4934.1101926608435, 4935.1422999033275,
    4936.1744036803802, 4937.2065039931213, 4938.2386008426738, 4939.2706942301584,
    4940.3027841566936, 4941.3348706233992, 4942.3669536313955, 4943.3990331817995,
    4944.4311092757289, 4945.4631819143015, 4946.4952510986332, 4947.527316829839,
    4948.5593791090359, 4949.5914379373371, 4950.6234933158576, 4951.6555452457096,
    4952.6875937280074, 4953.7196387638623, 4954.7516803543867, 4955.7837185006902,
    4956.8157532038849, 4957.8477844650797, 4958.8798122853841, 4959.9118366659059,
    4960.9438576077546, 4961.9758751120371, 4963.0078891798603, 4964.039899812331,
    4965.0719070105533, 4966.1039107756333, 4967.1359111086758, 4968.1679080107842,
    4969.1999014830617, 4970.2318915266123, 4971.2638781425367, 4972.2958613319361,
    4973.3278410959128, 4974.3598174355666, 4975.3917903519978, 4976.4237598463042,
    4977.4557259195853, 4978.48768857294, 4979.519647807464, 4980.5516036242552,
    4981.5835560244095, 4982.6155050090229, 4983.6474505791894, 4984.679392736005,
    4985.7113314805629, 4986.7432668139563, 4987.7751987372776, 4988.8071272516199,
    4989.8390523580747, 4990.8709740577315, 4991.9028923516826, 4992.9348072410166,
    4993.9667187268242, 4994.998626810192, 4996.0305314922098, 4997.0624327739642,
    4998.0943306565423, 4999.1262251410299, 5000.1581162285147, 5001.1900039200791,
    5002.2218882168108, 5003.2537691197913, 5004.2856466301046, 5005.3175207488348,
    5006.3493914770625, 5007.3812588158717, 5008.4131227663411, 5009.4449833295521,
    5010.4768405065852, 5011.5086942985199, 5012.540544706435, 5013.5723917314081,
    5014.604235374517, 5015.6360756368395, 5016.6679125194523, 5017.6997460234306,
    5018.7315761498503, 5019.7634028997863, 5020.795226274312, 5021.8270462745031,
    5022.8588629014303, 5023.8906761561684, 5024.9224860397871, 5025.9542925533606,
    5026.9860956979574, 5028.0178954746489, 5029.0496918845047, 5030.0814849285944,
    5031.1132746079857, 5032.1450609237472, 5033.1768438769468, 5034.2086234686503,
    5035.2403996999246, 5036.2721725718357, 5037.3039420854493, 5038.3357082418288,
    5039.3674710420391, 5040.3992304871435, 5041.4309865782052, 5042.4627393162864,
    5043.4944887024494, 5044.5262347377547, 5045.5579774232638, 5046.589716760036,
    5047.621452749132, 5048.6531853916104, 5049.6849146885297, 5050.7166406409469,
    5051.7483632499207, 5052.7800825165077, 5053.811798441764, 5054.8435110267455,
    5055.8752202725063, 5056.9069261801023, 5057.9386287505868, 5058.9703279850137,
    5060.0020238844363, 5061.033716449906, 5062.0654056824751, 5063.0970915831949,
    5064.1287741531169, 5065.1604533932896, 5066.1921293047635, 5067.2238018885882,
    5068.2554711458115, 5069.2871370774819, 5070.3187996846464, 5071.3504589683516,
    5072.3821149296446, 5073.4137675695702, 5074.4454168891743, 5075.4770628895021,
    5076.5087055715967, 5077.5403449365022, 5078.5719809852617, 5079.6036137189167,
    5080.6352431385112, 5081.6668692450839, 5082.6984920396781, 5083.7301115233331,
    5084.7617276970886, 5085.7933405619833, 5086.8249501190567, 5087.8565563693473,
    5088.8881593138913, 5089.9197589537271, 5090.9513552898898, 5091.9829483234171,
    5093.0145380553431, 5094.0461244867029, 5095.0777076185313, 5096.1092874518608,
    5097.1408639877272, 5098.172437227161, 5099.2040071711945, 5100.2355738208607,
    5101.2671371771894, 5102.2986972412118, 5103.3302540139584, 5104.361807496457,
    5105.3933576897389, 5106.42490459483, 5107.4564482127598, 5108.4879885445562,
    5109.519525591244, 5110.5510593538511, 5111.5825898334024, 5112.6141170309238,
    5113.6456409474395, 5114.6771615839734, 5115.7086789415498, 5116.7401930211909,
    5117.7717038239207, 5118.8032113507597, 5119.8347156027303, 5120.8662165808528,
    5121.8977142861477, 5122.9292087196354, 5123.9606998823356, 5124.9921877752658,
    5126.0236723994449, 5127.0551537558913, 5128.0866318456219, 5129.1181066696536,
    5130.1495782290012, 5131.1810465246817, 5132.212511557711, 5133.2439733291012,
    5134.2754318398693, 5135.3068870910265, 5136.338339083587, 5137.3697878185631,
    5138.4012332969669, 5139.4326755198099, 5140.4641144881025, 5141.4955502028552,
    5142.5269826650783, 5143.5584118757815, 5144.5898378359734, 5145.6212605466617,
    5146.652680008855, 5147.6840962235601, 5148.7155091917839, 5149.7469189145331,
    5150.7783253928119, 5151.8097286276279, 5152.8411286199835, 5153.8725253708844,
    5154.9039188813331, 5155.9353091523335, 5156.9666961848889, 5157.9980799799996,
    5159.029460538668, 5160.0608378618963, 5161.0922119506831, 5162.1235828060298,
    5163.154950428936, 5164.1863148203993, 5165.2176759814192, 5166.2490339129936,
    5167.2803886161209, 5168.3117400917963, 5169.3430883410165, 5170.3744333647792,
    5171.4057751640776, 5172.4371137399075, 5173.4684490932641, 5174.4997812251404,
    5175.5311101365296, 5176.5624358284249, 5177.5937583018185, 5178.6250775577018,
    5179.656393597068, 5180.6877064209057, 5181.7190160302061, 5182.750322425959,
    5183.7816256091537, 5184.8129255807789, 5185.8442223418233, 5186.8755158932736,
    5187.9068062361184, 5188.9380933713437, 5189.9693772999353, 5191.0006580228801,
    5192.031935541163, 5193.063209855768, 5194.0944809676803, 5195.1257488778829,
    5196.157013587359, 5197.1882750970917, 5198.2195334080634, 5199.2507885212563,
    5200.2820404376498, 5201.3132891582263, 5202.3445346839644, 5203.3757770158463,
    5204.4070161548489, 5205.4382521019515, 5206.469484858133, 5207.5007144243709,
    5208.5319408016412, 5209.5631639909225, 5210.5943839931897, 5211.6256008094197,
    5212.6568144405855, 5213.6880248876651, 5214.7192321516295, 5215.7504362334539,
    5216.7816371341123, 5217.8128348545761, 5218.8440293958174, 5219.8752207588095,
    5220.9064089445228, 5221.9375939539268, 5222.9687757879938, 5223.9999544476932,
    5225.0311299339928, 5226.062302247863, 5227.0934713902716, 5228.1246373621861,
    5229.1558001645735, 5230.1869597984014, 5231.2181162646357, 5232.2492695642422,
    5233.280419698187, 5234.3115666674339, 5235.3427104729471, 5236.3738511156917,
    5237.4049885966306, 5238.4361229167262, 5239.4672540769407, 5240.4983820782372,
    5241.5295069215763, 5242.5606286079192, 5243.5917471382254, 5244.6228625134563,
    5245.6539747345714, 5246.6850838025284, 5247.7161897182859, 5248.7472924828035,
    5249.7783920970378, 5250.8094885619448, 5251.8405818784822, 5252.8716720476068,
    5253.9027590702726, 5254.9338429474356, 5255.9649236800506, 5256.9960012690708,
    5258.0270757154503, 5259.0581470201432, 5260.0892151841017, 5261.1202802082771,
    5262.1513420936217, 5263.1824008410877, 5264.2134564516236, 5265.2445089261828,
    5266.2755582657119, 5267.3066044711632, 5268.3376475434834, 5269.3686874836221,
    5270.3997242925261, 5271.430757971144, 5272.4617885204216, 5273.4928159413066,
    5274.5238402347441, 5275.5548614016807, 5276.5858794430596, 5277.6168943598268,
    5278.6479061529262, 5279.6789148233011, 5280.7099203718944, 5281.7409227996495,
    5282.7719221075076, 5283.802918296411, 5284.8339113673019, 5285.8649013211198,
    5286.8958881588051, 5287.9268718812973, 5288.9578524895369, 5289.9888299844624,
    5291.0198043670116, 5292.050775638123, 5293.0817437987334, 5294.1127088497806,
    5295.1436707922012, 5296.1746296269303, 5297.2055853549036, 5298.2365379770572,
    5299.267487494325, 5300.298433907642, 5301.3293772179404, 5302.3603174261552,
    5303.3912545332178, 5304.4221885400602, 5305.4531194476158, 5306.4840472568148,
    5307.5149719685887, 5308.5458935838678, 5309.5768121035826, 5310.6077275286616,
    5311.6386398600334, 5312.6695490986285, 5313.7004552453736, 5314.7313583011965,
    5315.7622582670247, 5316.793155143785, 5317.8240489324035, 5318.8549396338058,
    5319.8858272489169, 5320.9167117786628, 5321.9475932239666, 5322.9784715857531,
    5324.0093468649466, 5325.0402190624682, 5326.0710881792411, 5327.1019542161885,
    5328.1328171742307, 5329.16367705429, 5330.1945338572859, 5331.2253875841398,
    5332.256238235771, 5333.2870858130982, 5334.3179303170418, 5335.3487717485195,
    5336.3796101084481, 5337.410445397747, 5338.4412776173322, 5339.4721067681212,
    5340.5029328510291, 5341.5337558669717, 5342.5645758168648, 5343.5953927016235,
    5344.6262065221608, 5345.6570172793918, 5346.6878249742285, 5347.7186296075861,
    5348.7494311803757, 5349.7802296935088, 5350.8110251478984, 5351.8418175444549,
    5352.8726068840888, 5353.9033931677104, 5354.9341763962302, 5355.9649565705568,
};

}  // namespace fyshuffle::detail

#endif  // FYSHUFFLE_DETAIL_CHI2_TABLE_HPP_
