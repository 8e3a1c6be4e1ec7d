#pragma once
// Generated by reference/generate.py (mpmath, 50 significant digits). Do not edit.
namespace ref {

inline constexpr double psi_root = 1.4616321449683623;
inline constexpr double euler_gamma = 5.7721566490153286e-1;

struct ln_gamma_row { double x; double value; };
inline constexpr ln_gamma_row ln_gamma[] = {
    {1.0e-3, 6.9071788853838537},
    {1.0000000000000001e-1, 2.2527126517342059},
    {5.0e-1, 5.7236494292470009e-1},
    {1.5, -1.2078223763524522e-1},
    {3.7000000000000002, 1.4280723266653881},
    {1.0e+1, 1.280182748008147e+1},
    {1.23456e+2, 4.6960554712992948e+2},
    {1.0e+4, 8.2099717496442377e+4},
    {1.0e+6, 1.2815504569147612e+7},
};

struct polygamma_row { double k; double x; double value; };
inline constexpr polygamma_row polygamma[] = {
    {0.0, 1.0e-3, -1.0005755719318103e+3},
    {0.0, 1.0e-2, -1.0056088545786867e+2},
    {0.0, 2.9999999999999999e-1, -3.5025242222001331},
    {0.0, 1.0, -5.7721566490153286e-1},
    {0.0, 2.5, 7.0315664064524319e-1},
    {0.0, 7.0, 1.8727843350984671},
    {0.0, 3.1399999999999999e+1, 3.4307998146093964},
    {0.0, 1.0e+3, 6.9072551956488121},
    {0.0, 1.0e+5, 1.1512920464961895e+1},
    {1.0, 1.0e-3, 1.0000016425331958e+6},
    {1.0, 1.0e-2, 1.0001621213528313e+4},
    {1.0, 2.9999999999999999e-1, 1.2245364546107731e+1},
    {1.0, 1.0, 1.6449340668482264},
    {1.0, 2.5, 4.9035775610023486e-1},
    {1.0, 7.0, 1.5354517795933755e-1},
    {1.0, 3.1399999999999999e+1, 3.2359636070142212e-2},
    {1.0, 1.0e+3, 1.0005001666666333e-3},
    {1.0, 1.0e+5, 1.0000050000166667e-5},
    {2.0, 1.0e-3, -2.0000000023976322e+9},
    {2.0, 1.0e-2, -2.000002340398677e+6},
    {2.0, 2.9999999999999999e-1, -7.5272536588726039e+1},
    {2.0, 1.0, -2.4041138063191886},
    {2.0, 2.5, -2.362040516417274e-1},
    {2.0, 7.0, -2.3530472985855237e-2},
    {2.0, 3.1399999999999999e+1, -1.0470547308701439e-3},
    {2.0, 1.0e+3, -1.0010004999998333e-6},
    {2.0, 1.0e+5, -1.00001000005e-10},
    {3.0, 1.0e-3, 6.0000000000064686e+12},
    {3.0, 1.0e-2, 6.0000000625106182e+8},
    {3.0, 2.9999999999999999e-1, 7.4314176465504978e+2},
    {3.0, 1.0, 6.4939394022668291},
    {3.0, 2.5, 2.2390584881725205e-1},
    {3.0, 7.0, 7.1981985631254454e-3},
    {3.0, 3.1399999999999999e+1, 6.7752805240235066e-5},
    {3.0, 1.0e+3, 2.003001999999e-9},
    {3.0, 1.0e+5, 2.0000300002e-15},
    {4.0, 1.0e-3, -2.4000000000000022e+16},
    {4.0, 1.0e-2, -2.400000000237009e+11},
    {4.0, 2.9999999999999999e-1, -9.8834685554969897e+3},
    {4.0, 1.0, -2.4886266123440878e+1},
    {4.0, 2.5, -3.1375599950673136e-1},
    {4.0, 7.0, -3.2967715890263801e-3},
    {4.0, 3.1399999999999999e+1, -6.5756488328970493e-6},
    {4.0, 1.0e+3, -6.012009999993e-12},
    {4.0, 1.0e+5, -6.000120001e-20},
    {5.0, 1.0e-3, 1.1999999999999999e+20},
    {5.0, 1.0e-2, 1.2000000000011505e+14},
    {5.0, 2.9999999999999999e-1, 1.6463484609922304e+5},
    {5.0, 1.0, 1.220811674381339e+2},
    {5.0, 2.5, 5.7856917856718348e-1},
    {5.0, 7.0, 2.0094931750490291e-3},
    {5.0, 3.1399999999999999e+1, 8.5084584458963254e-7},
    {5.0, 1.0e+3, 2.4060059999944e-14},
    {5.0, 1.0e+5, 2.4000600006e-24},
    {6.0, 1.0e-3, -7.199999999999999e+23},
    {6.0, 1.0e-2, -7.2000000000000667e+16},
    {6.0, 2.9999999999999999e-1, -3.2922981329083703e+6},
    {6.0, 1.0, -7.2601147971498444e+2},
    {6.0, 2.5, -1.3180061075500352},
    {6.0, 7.0, -1.5282790276452012e-3},
    {6.0, 3.1399999999999999e+1, -1.3760537614080555e-7},
    {6.0, 1.0e+3, -1.20360419999496e-16},
    {6.0, 1.0e+5, -1.20003600042e-28},
    {7.0, 1.0e-3, 5.0399999999999992e+27},
    {7.0, 1.0e-2, 5.0399999999999996e+19},
    {7.0, 2.9999999999999999e-1, 7.6818182998493221e+7},
    {7.0, 1.0, 5.0605498752376395e+3},
    {7.0, 2.5, 3.5652363525231314},
    {7.0, 7.0, 1.3922719030164219e-3},
    {7.0, 3.1399999999999999e+1, 2.6703208162715503e-8},
    {7.0, 1.0e+3, 7.2252335999496002e-19},
    {7.0, 1.0e+5, 7.20025200336e-33},
    {8.0, 1.0e-3, -4.0319999999999992e+31},
    {8.0, 1.0e-2, -4.0319999999999992e+22},
    {8.0, 2.9999999999999999e-1, -2.0484720468178866e+9},
    {8.0, 1.0, -4.0400978398747635e+4},
    {8.0, 2.5, -1.1146030731869932e+1},
    {8.0, 7.0, -1.477178082416192e-3},
    {8.0, 3.1399999999999999e+1, -6.0450595764907647e-9},
    {8.0, 1.0e+3, -5.0601902399445602e-21},
    {8.0, 1.0e+5, -5.040201603024e-37},
    {9.0, 1.0e-3, 3.6287999999999992e+35},
    {9.0, 1.0e-2, 3.6287999999999992e+25},
    {9.0, 2.9999999999999999e-1, 6.1454073052034767e+10},
    {9.0, 1.0, 3.6324091142238263e+5},
    {9.0, 2.5, 3.9490721569884888e+1},
    {9.0, 7.0, 1.788099024012219e-3},
    {9.0, 3.1399999999999999e+1, 1.5638389883345676e-9},
    {9.0, 1.0e+3, 4.0501742399334723e-23},
    {9.0, 1.0e+5, 4.032181443024e-41},
    {1.0e+1, 1.0e-3, -3.6287999999999992e+39},
    {1.0e+1, 1.0e-2, -3.6287999999999992e+28},
    {1.0e+1, 2.9999999999999999e-1, -2.0484684241780744e+12},
    {1.0e+1, 1.0, -3.6305933116066287e+6},
    {1.0e+1, 2.5, -1.5622959659323299e+2},
    {1.0e+1, 7.0, -2.4309655551116751e-3},
    {1.0e+1, 3.1399999999999999e+1, -4.5509117998796837e-10},
    {1.0e+1, 1.0e+3, -3.646977263913514e-25},
    {1.0e+1, 1.0e+5, -3.6289814433264e-45},
    {1.1e+1, 1.0e-3, 3.991679999999999e+43},
    {1.1e+1, 1.0e-2, 3.991679999999999e+31},
    {1.1e+1, 2.9999999999999999e-1, 7.5110503163104723e+13},
    {1.1e+1, 1.0, 3.9926622987731087e+7},
    {1.1e+1, 2.5, 6.8214486924279815e+2},
    {1.1e+1, 7.0, 3.6662166144410326e-3},
    {1.1e+1, 3.1399999999999999e+1, 1.4713796754568846e-10},
    {1.1e+1, 1.0e+3, 3.6487983166789197e-27},
    {1.1e+1, 1.0e+5, 3.62899958799168e-49},
    {1.2e+1, 1.0e-3, -4.7900159999999987e+47},
    {1.2e+1, 1.0e-2, -4.7900159999999987e+34},
    {1.2e+1, 2.9999999999999999e-1, -3.0044200737427476e+15},
    {1.2e+1, 1.0, -4.7906037988983145e+8},
    {1.2e+1, 2.5, -3.2566979804026979e+3},
    {1.2e+1, 7.0, -6.0724466607769417e-3},
    {1.2e+1, 3.1399999999999999e+1, -5.2324644885013553e-11},
    {1.2e+1, 1.0e+3, -4.0156819716583797e-29},
    {1.2e+1, 1.0e+5, -3.991919505989184e-53},
};

struct family_row { double s; double t; double lambda; double x; double delta; double theta; double ln_h; double z; };
inline constexpr family_row family[] = {
    {2.9999999999999999e-1, 8.0000000000000004e-1, 4.0000000000000002e-1, -2.8999999999999998e-1, 3.0926572753156468e+4, 7.8860423318390507e+1, -3.1054835396497437, 2.903056676613539e-1},
    {2.9999999999999999e-1, 8.0000000000000004e-1, 4.0000000000000002e-1, 2.0000000000000001e-1, 5.0553537157340598, 1.1725887222397811, -3.1295326917746576e-1, 1.1830988618379068e-1},
    {2.9999999999999999e-1, 8.0000000000000004e-1, 4.0000000000000002e-1, 1.7, 1.9077347027206573e-1, 2.8074461109355209e-1, 4.7062170977322797e-1, 6.7145867644258712e-2},
    {2.9999999999999999e-1, 8.0000000000000004e-1, 4.0000000000000002e-1, 2.9699999999999999e+1, 6.7785440216345162e-4, 1.9840580748993727e-2, 2.0456089228989048, 5.1050253369924903e-2},
    {2.9999999999999999e-1, 8.0000000000000004e-1, 4.0000000000000002e-1, 9.9970000000000005e+2, 6.0030006248748429e-7, 5.9985019986879994e-4, 4.1448030674330196, 5.0031257810055804e-2},
    {0.0, 2.5, 6.9999999999999996e-1, 1.0e-2, -1.1594537820494921e+3, -1.4552187394951405e+1, 6.7170480430223484e-1, 1.6851254769558736e-1},
    {0.0, 2.5, 6.9999999999999996e-1, 5.0e-1, 6.1748144810189685e-2, 4.5177444479562993e-3, 2.6475200106185156e-1, 5.4949898699742595e-1},
    {0.0, 2.5, 6.9999999999999996e-1, 2.0, 3.8393218423726361e-2, 7.8101303171091388e-2, 3.7465206951256591e-1, 6.6844159129737827e-1},
    {0.0, 2.5, 6.9999999999999996e-1, 3.0e+1, 3.1722230301454278e-4, 9.58666335850989e-3, 1.032814005264002, 7.42884791342093e-1},
    {0.0, 2.5, 6.9999999999999996e-1, 1.0e+3, 2.9955046212503523e-7, 2.9962506343370224e-4, 2.0727015521330915, 7.4978141389930391e-1},
    {1.2, 2.0000000000000001e-1, 2.0, -1.9e-1, -9.9999999999999823e+3, -5.0495049504950448e+1, 2.2976099275674611, 2.0000000000000001e-1},
    {1.2, 2.0000000000000001e-1, 2.0, 2.9999999999999999e-1, -4.0000000000000001, -1.3333333333333333, 1.4384103622589047e-1, 1.9999999999999999e-1},
    {1.2, 2.0000000000000001e-1, 2.0, 1.8, -2.4999999999999999e-1, -4.1666666666666666e-1, -8.9587973461402752e-1, 1.9999999999999999e-1},
    {1.2, 2.0000000000000001e-1, 2.0, 2.9800000000000001e+1, -1.1111111111111111e-3, -3.2795698924731182e-2, -3.4175922930736508, 1.9999999999999998e-1},
    {1.2, 2.0000000000000001e-1, 2.0, 9.9979999999999995e+2, -1.0000000000000001e-6, -9.9950049950049955e-4, -6.9082550291486788, 1.9999999999999998e-1},
    {0.0, 0.0, 5.0e-1, 1.0e-2, 9.9032425728700222e+7, 4.951621213528313e+3, -4.8258300364874628e+1, -1.0e-2},
    {0.0, 0.0, 5.0e-1, 5.0e-1, 1.5937874436383449e+1, 1.9348022005446793, -6.1693643574145082e-1, -3.5963512910827871e-1},
    {0.0, 0.0, 5.0e-1, 2.0, 2.1388304742179832e-1, 2.6993406684822644e-1, 3.2621074481849448e-1, -4.7379488840413612e-1},
    {0.0, 0.0, 5.0e-1, 3.0e+1, 5.7449251479053395e-4, 1.6672838135517722e-2, 1.7005061085211139, -4.9858782067757708e-1},
    {0.0, 0.0, 5.0e-1, 1.0e+3, 5.0050033350004441e-7, 5.0000016666663333e-4, 3.4538775561577435, -4.9995831249601138e-1},
    {0.0, 1.0, 2.9999999999999999e-1, 1.0e-2, 6.9999999999999998e+3, 3.5346534653465346e+1, -1.6083269492972232, -6.2642922892785835e-53},
    {0.0, 1.0, 2.9999999999999999e-1, 5.0e-1, 2.8, 9.3333333333333335e-1, -1.0068872535812333e-1, 0.0},
    {0.0, 1.0, 2.9999999999999999e-1, 2.0, 1.75e-1, 2.9166666666666667e-1, 6.2711581422981926e-1, 0.0},
    {0.0, 1.0, 2.9999999999999999e-1, 3.0e+1, 7.7777777777777779e-4, 2.2956989247311828e-2, 2.3923146051515556, 2.4375614156040824e-48},
    {0.0, 1.0, 2.9999999999999999e-1, 1.0e+3, 7.0000000000000001e-7, 6.9965034965034966e-4, 4.8357785204040752, 6.6807999051110908e-45},
    {-4.0000000000000002e-1, 3.4999999999999998e-1, 1.6000000000000001, 4.1000000000000003e-1, -3.7309716430979894e+3, -1.4175196603813684e+1, 9.149327628115265e-1, -4.0719375621936584e-1},
    {-4.0000000000000002e-1, 3.4999999999999998e-1, 1.6000000000000001, 9.0000000000000002e-1, -2.615245350381644, -7.2525800980645603e-1, 9.2681018850674176e-2, -4.910581759169308e-1},
    {-4.0000000000000002e-1, 3.4999999999999998e-1, 1.6000000000000001, 2.3999999999999999, -1.6342566940457033e-1, -2.5366259531556126e-1, -5.1787643049180098e-1, -5.1558098999619721e-1},
    {-4.0000000000000002e-1, 3.4999999999999998e-1, 1.6000000000000001, 3.0399999999999999e+1, -6.7212906676154051e-4, -1.9753495824580115e-2, -2.0481657273117675, -5.243899032089807e-1},
    {-4.0000000000000002e-1, 3.4999999999999998e-1, 1.6000000000000001, 1.0004e+3, -6.0014992599535421e-7, -5.9977509578883783e-4, -4.144878119487451, -5.2498176855665841e-1},
    {2.0, 5.5, -5.0e-1, -1.99, 2.2725313440125517e+3, 3.9874022334085568e+1, -9.679785650340155e-1, 2.3699007659176494},
    {2.0, 5.5, -5.0e-1, -1.5, 1.5106298913717077, 1.2323936269866354, 8.1874830860949286e-1, 2.9167966402047274},
    {2.0, 5.5, -5.0e-1, 0.0, 1.7892761436364066e-1, 4.6451680385236685e-1, 1.8747922249018659, 3.0981463800965403},
    {2.0, 5.5, -5.0e-1, 2.8e+1, 1.5394483379702882e-3, 4.7329274330486671e-2, 5.1854887235137161, 3.2349921686964393},
    {2.0, 5.5, -5.0e-1, 9.98e+2, 1.4962602844515256e-6, 1.4973822902588425e-3, 1.0364254269642858e+1, 3.2495318349681159},
    {5.0e-1, 5.0e-1, 1.0, -4.8999999999999999e-1, 9.8032424558500542e+7, 4.9016212135283044e+3, -4.595571527188054e+1, 4.8999999999999999e-1},
    {5.0e-1, 5.0e-1, 1.0, 0.0, 7.5234761142662893, 9.3480220054467931e-1, -2.7036284546147817e-1, 1.4036487089172129e-1},
    {5.0e-1, 5.0e-1, 1.0, 1.5, 1.1826144262204035e-2, 1.9934066848226436e-2, -2.036284546147817e-2, 2.620511159586388e-2},
    {5.0e-1, 5.0e-1, 1.0, 2.95e+1, 1.0991292623403102e-7, 6.1714688510553249e-6, -9.2582309963832185e-5, 1.4121793224229159e-3},
    {5.0e-1, 5.0e-1, 1.0, 9.995e+2, 8.350012774431431e-14, 1.6666663333335714e-10, -8.3333325000003968e-8, 4.1687503988624996e-5},
};

struct family_deriv_row { double s; double t; double lambda; double x; double d1; double d2; double d3; double d4; double t1; double t2; double t3; double t4; };
inline constexpr family_deriv_row family_deriv[] = {
    {2.9999999999999999e-1, 8.0000000000000004e-1, 4.0000000000000002e-1, -9.9999999999999978e-2, -5.6677032379725416e+2, 9.3877474126226165e+3, -1.9925347336398949e+5, 5.1739518376768566e+6, -1.8499309158682822e+1, 1.9475080951255993e+2, -2.9747233605100377e+3, 5.9845246603730347e+4},
    {2.9999999999999999e-1, 8.0000000000000004e-1, 4.0000000000000002e-1, 1.2, -5.5604913379018528e-1, 1.2524876584808931, -3.7122048760369161, 1.3589160923337255e+1, -2.4640293405957241e-1, 3.3825456471915175e-1, -7.08081041248994e-1, 1.9833748138601015},
    {2.9999999999999999e-1, 8.0000000000000004e-1, 4.0000000000000002e-1, 1.9699999999999999e+1, -1.5570207364055533e-4, 2.3644212033099585e-5, -4.7869963099173582e-6, 1.2113800173021554e-6, -1.4660898028697389e-3, 1.4508514207779072e-4, -2.1550599852516295e-5, 4.2708549175021645e-6},
    {0.0, 2.5, 6.9999999999999996e-1, 2.0000000000000001e-1, 2.0074862383706956e+1, -3.481621665560593e+2, 7.4652310052413953e+3, -1.9427741986915792e+5, 3.4425100770850596, -3.7002829467484857e+1, 5.6128740906325635e+2, -1.1246028209324951e+4},
    {0.0, 2.5, 6.9999999999999996e-1, 1.5, -4.4412805597118513e-2, 4.5849968275860713e-2, -3.8069627588653316e-2, -8.3902655241240591e-2, -6.5722534785811604e-3, -3.1110661130243713e-2, 1.0967719452797896e-1, -3.6708757580822658e-1},
    {0.0, 2.5, 6.9999999999999996e-1, 2.0e+1, -6.7111676593541611e-5, 9.6983719439994135e-6, -1.8684630841458078e-6, 4.4990878942002464e-7, -6.5834291421612018e-4, 6.1391601462032584e-5, -8.5590239123905714e-6, 1.5854895212779377e-6},
    {1.2, 2.0000000000000001e-1, 2.0, 0.0, 2.4999999999999996e+2, -3.7499999999999992e+3, 7.499999999999998e+4, -1.8749999999999994e+6, 1.284722222222222e+1, -1.2557870370370368e+2, 1.8764467592592587e+3, -3.7504822530864185e+4},
    {1.2, 2.0000000000000001e-1, 2.0, 1.3, 5.9259259259259254e-1, -1.185185185185185, 3.1604938271604933, -1.0534979423868311e+1, 3.022222222222222e-1, -3.6029629629629626e-1, 6.6939259259259249e-1, -1.7031269135802466},
    {1.2, 2.0000000000000001e-1, 2.0, 1.9800000000000001e+1, 2.4999999999999997e-4, -3.7499999999999995e-5, 7.4999999999999987e-6, -1.8749999999999996e-6, 2.3837868480725622e-3, -2.3297969981643449e-4, 3.4175671402347783e-5, -6.6882231242567202e-6},
    {0.0, 0.0, 5.0e-1, 2.0000000000000001e-1, -1.1334714369561779e+4, 2.8615310309592183e+5, -8.6662744792367741e+6, 3.0580819224772392e+8, -1.1397803611443591e+2, 1.7532449948647254e+3, -3.563521249797265e+4, 9.0004138967841747e+5},
    {0.0, 0.0, 5.0e-1, 1.5, -8.4497633666735744e-1, 2.2711256403610391, -7.9457979876145659, 3.3997775510546311e+1, -3.1027812571580148e-1, 5.2020214511354835e-1, -1.3014103204943857, 4.2658119769210929},
    {0.0, 0.0, 5.0e-1, 2.0e+1, -1.3480488601241117e-4, 2.0733141871123649e-5, -4.2513945561116086e-6, 1.0896215935287856e-6, -1.2531224023146546e-3, 1.2562422133963891e-4, -1.8905977726396668e-5, 3.7967662061582301e-6},
    {0.0, 1.0, 2.9999999999999999e-1, 2.0000000000000001e-1, -1.7499999999999997e+2, 2.6249999999999995e+3, -5.2499999999999986e+4, 1.3124999999999996e+6, -8.9930555555555547, 8.7905092592592579e+1, -1.3135127314814812e+3, 2.6253375771604931e+4},
    {0.0, 1.0, 2.9999999999999999e-1, 1.5, -4.1481481481481482e-1, 8.2962962962962964e-1, -2.2123456790123457, 7.374485596707819, -2.1155555555555556e-1, 2.5220740740740741e-1, -4.6857481481481482e-1, 1.1921888395061729},
    {0.0, 1.0, 2.9999999999999999e-1, 2.0e+1, -1.75e-4, 2.625e-5, -5.2500000000000001e-6, 1.3125e-6, -1.6686507936507937e-3, 1.6308578987150416e-4, -2.3922969981643451e-5, 4.681756186979705e-6},
    {-4.0000000000000002e-1, 3.4999999999999998e-1, 1.6000000000000001, 6.0000000000000009e-1, 1.2768511650030364e+2, -1.7657008541908237e+3, 3.3363893413905111e+4, -8.01846436863852e+5, 4.1563140840696253, -3.5357198918825756e+1, 5.0719874491936576e+2, -1.0033205299392766e+4},
    {-4.0000000000000002e-1, 3.4999999999999998e-1, 1.6000000000000001, 1.8999999999999999, 4.0066541116962329e-1, -8.0633691652095619e-1, 2.1402523582256857, -7.0442713803647068, 1.7489190569476459e-1, -1.9247125892564368e-1, 3.234236590347155e-1, -7.3997559058806687e-1},
    {-4.0000000000000002e-1, 3.4999999999999998e-1, 1.6000000000000001, 2.0399999999999999e+1, 1.5271663527183129e-4, -2.3038373656903361e-5, 4.6333401573301685e-6, -1.1646217695842527e-6, 1.4454938323770754e-3, -1.4190873749848565e-4, 2.0898438690523414e-5, -4.1037237620152194e-6},
    {2.0, 5.5, -5.0e-1, -1.8, -6.327272075376075e+1, 9.1115049758169586e+2, -1.7867895919182608e+4, 4.4150398698810723e+5, -1.0123650749676488e+1, 9.862483764736263e+1, -1.4741373529554632e+3, 2.946720201377819e+4},
    {2.0, 5.5, -5.0e-1, -5.0e-1, -2.8262120907384856e-1, 4.6850248123737446e-1, -1.0998478059221782, 3.3607053463210534, -2.6718454613549447e-1, 2.9263689548897935e-1, -5.2723075721546474e-1, 1.3302662344315136},
    {2.0, 5.5, -5.0e-1, 1.8e+1, -3.156910437847821e-4, 4.4857400456049824e-5, -8.5122012972446823e-6, 2.0223305067101907e-6, -3.2076345896887119e-3, 2.9837277512986965e-4, -4.1789635229879603e-5, 7.8330987032427031e-6},
    {5.0e-1, 5.0e-1, 1.0, -2.9999999999999999e-1, -9.4580918721294161e+3, 2.4864799684693551e+5, -7.7287537843975655e+6, 2.7768309020952185e+8, -1.0147803611443591e+2, 1.6282449948647254e+3, -3.3760212497972651e+4, 8.6254138967841748e+5},
    {5.0e-1, 5.0e-1, 1.0, 1.0, -1.4043081966613883e-1, 5.3400072702742652e-1, -2.3890236863968177, 1.2268813609034668e+1, -8.8055903493579255e-2, 2.2390584881725205e-1, -7.0881772790179309e-1, 2.685565063340846},
    {5.0e-1, 5.0e-1, 1.0, 1.95e+1, -1.177753425917126e-7, 3.0153007925314948e-8, -9.2614530324935173e-9, 3.3179183215406923e-9, -3.1224023146545934e-6, 6.2422133963891459e-7, -1.5597772639666847e-7, 4.6766206158230071e-8},
};

struct capital_lambda_row { double s; double t; double x; double value; };
inline constexpr capital_lambda_row capital_lambda[] = {
    {0.0, 5.0e-1, 1.0e-3, 1.9944789732526432},
    {0.0, 5.0e-1, 6.9999999999999996e-1, 1.1200553094080567},
    {0.0, 5.0e-1, 1.5e+1, 1.0005370578525151},
    {0.0, 5.0e-1, 1.0e+4, 1.0000000012499375},
    {2.9999999999999999e-1, 8.0000000000000004e-1, -2.9899999999999999e-1, 1.994478973252643},
    {2.9999999999999999e-1, 8.0000000000000004e-1, 3.9999999999999997e-1, 1.1200553094080566},
    {2.9999999999999999e-1, 8.0000000000000004e-1, 1.4699999999999999e+1, 1.0005370578525151},
    {2.9999999999999999e-1, 8.0000000000000004e-1, 9.9997000000000007e+3, 1.0000000012499375},
    {0.0, 2.5, 1.0e-3, 4.0102296602691589e-1},
    {0.0, 2.5, 6.9999999999999996e-1, 7.6312859010571416e-1},
    {0.0, 2.5, 1.5e+1, 9.9668497905406106e-1},
    {0.0, 2.5, 1.0e+4, 9.9999999125218708e-1},
    {1.0, -5.0e-1, 5.01e-1, 6.6748345089838662e-1},
    {1.0, -5.0e-1, 1.2, 9.0438996104652076e-1},
    {1.0, -5.0e-1, 1.55e+1, 9.9916045356837563e-1},
    {1.0, -5.0e-1, 1.00005e+4, 9.9999999791697913e-1},
};

struct phi_row { double x; double value; };
inline constexpr phi_row phi[] = {
    {1.0e-4, -5.7705118351433485e-1},
    {1.0e-2, -5.608854578686745e-1},
    {5.0e-1, -1.0892348389028254e-1},
    {1.0, -3.5890810288614752e-2},
    {2.0, -9.9677944687214325e-3},
    {5.0e+1, -1.6665389142397823e-5},
    {1.0e+4, -4.1666666586805556e-10},
};

struct kernel_row { double s; double t; double u; double value; };
inline constexpr kernel_row kernel[] = {
    {0.0, 5.0e-1, 1.0e-3, 1.0000000624999974},
    {0.0, 5.0e-1, 5.0e-1, 1.0154636690496066},
    {0.0, 5.0e-1, 3.0, 1.4034141917186686},
    {0.0, 5.0e-1, 4.0e+1, 1.9999999917553855},
    {0.0, 2.5, 1.0e-3, 9.9999956250028073e-1},
    {0.0, 2.5, 5.0e-1, 9.0576964108225222e-1},
    {0.0, 2.5, 3.0, 4.4142799312876652e-1},
    {0.0, 2.5, 4.0e+1, 4.0e-1},
    {1.0, 2.9999999999999999e-1, 1.0e-3, 1.0000000424999972},
    {1.0, 2.9999999999999999e-1, 5.0e-1, 1.010452998876534},
    {1.0, 2.9999999999999999e-1, 3.0, 1.2339041926645449},
    {1.0, 2.9999999999999999e-1, 4.0e+1, 1.428571428569453},
};

struct q_func_row { double x; double value; };
inline constexpr q_func_row q_func[] = {
    {2.9999999999999999e-1, 1.408277203679362},
    {1.0, 1.0614113977535745},
    {2.0, 1.0204601305017193},
    {5.0, 1.00528888879346},
    {1.0e+2, 1.0001060074156057},
};

struct divided_diff_row { double k; double s; double t; double x; double value; };
inline constexpr divided_diff_row divided_diff[] = {
    {0.0, 0.0, 5.0e-1, 1.0e-3, 1.9972339766195877e+3},
    {0.0, 0.0, 5.0e-1, 4.0000000000000002e-1, 3.6129151892761293},
    {0.0, 0.0, 5.0e-1, 6.0, 1.7358732393626494e-1},
    {0.0, 0.0, 5.0e-1, 2.0e+3, 5.0006249999804688e-4},
    {0.0, 2.5e-1, 2.5000000100000003e-1, -2.49e-1, 1.0000006425341657e+6},
    {0.0, 2.5e-1, 2.5000000100000003e-1, 1.5000000000000002e-1, 7.275356574410032},
    {0.0, 2.5e-1, 2.5000000100000003e-1, 5.75, 1.8132295572072046e-1},
    {0.0, 2.5e-1, 2.5000000100000003e-1, 1.99975e+3, 5.0012502083320723e-4},
    {0.0, 0.0, 9.9999999999999995e-7, 1.0e-3, 9.9900264153299601e+5},
    {0.0, 0.0, 9.9999999999999995e-7, 4.0000000000000002e-1, 7.2753404710046507},
    {0.0, 0.0, 9.9999999999999995e-7, 6.0, 1.8132293934225117e-1},
    {0.0, 0.0, 9.9999999999999995e-7, 2.0e+3, 5.0012502070826978e-4},
    {0.0, 1.0, 3.5, -9.99e-1, 4.0051168752485841e+2},
    {0.0, 1.0, 3.5, -5.9999999999999998e-1, 1.377553798089144},
    {0.0, 1.0, 3.5, 5.0, 1.4958925965904786e-1},
    {0.0, 1.0, 3.5, 1.999e+3, 4.9981262491217339e-4},
    {0.0, 6.9999999999999996e-1, 0.0, 1.0e-3, 1.4276548274486855e+3},
    {0.0, 6.9999999999999996e-1, 0.0, 4.0000000000000002e-1, 3.0537565773914847},
    {0.0, 6.9999999999999996e-1, 0.0, 6.0, 1.7072956448288252e-1},
    {0.0, 6.9999999999999996e-1, 0.0, 2.0e+3, 5.0003749749901583e-4},
    {0.0, 0.0, 0.0, 1.0e-3, 1.0000016425331958e+6},
    {0.0, 0.0, 0.0, 4.0000000000000002e-1, 7.2753565905295967},
    {0.0, 0.0, 0.0, 6.0, 1.8132295573711533e-1},
    {0.0, 0.0, 0.0, 2.0e+3, 5.0012502083333229e-4},
    {1.0, 0.0, 5.0e-1, 1.0e-3, -1.9999934490224313e+6},
    {1.0, 0.0, 5.0e-1, 4.0000000000000002e-1, -1.0705633262104787e+1},
    {1.0, 0.0, 5.0e-1, 6.0, -3.0076839974314175e-2},
    {1.0, 0.0, 5.0e-1, 2.0e+3, -2.5006249999609375e-7},
    {1.0, 2.5e-1, 2.5000000100000003e-1, -2.49e-1, -1.9999970024015453e+9},
    {1.0, 2.5e-1, 2.5000000100000003e-1, 1.5000000000000002e-1, -3.2239128505480719e+1},
    {1.0, 2.5e-1, 2.5000000100000003e-1, 5.75, -3.2789732239200582e-2},
    {1.0, 2.5e-1, 2.5000000100000003e-1, 1.99975e+3, -2.501250312498723e-7},
    {1.0, 0.0, 9.9999999999999995e-7, 1.0e-3, -1.9970039974036219e+9},
    {1.0, 0.0, 9.9999999999999995e-7, 4.0000000000000002e-1, -3.2239010526340265e+1},
    {1.0, 0.0, 9.9999999999999995e-7, 6.0, -3.2789726331201464e-2},
    {1.0, 0.0, 9.9999999999999995e-7, 2.0e+3, -2.5012503112490361e-7},
    {1.0, 1.0, 3.5, -9.99e-1, -4.0000046096461206e+5},
    {1.0, 1.0, 3.5, -5.9999999999999998e-1, -2.7457571370145074},
    {1.0, 1.0, 3.5, 5.0, -2.2593934727275721e-2},
    {1.0, 1.0, 3.5, 1.999e+3, -2.4981268732437876e-7},
    {1.0, 6.9999999999999996e-1, 0.0, 1.0e-3, -1.4285697355801665e+6},
    {1.0, 6.9999999999999996e-1, 0.0, 4.0000000000000002e-1, -8.3457963424811975},
    {1.0, 6.9999999999999996e-1, 0.0, 6.0, -2.9113101208730023e-2},
    {1.0, 6.9999999999999996e-1, 0.0, 2.0e+3, -2.5003749624803176e-7},
    {1.0, 0.0, 0.0, 1.0e-3, -2.0000000023976322e+9},
    {1.0, 0.0, 0.0, 4.0000000000000002e-1, -3.2239128623578352e+1},
    {1.0, 0.0, 0.0, 6.0, -3.2789732245114497e-2},
    {1.0, 0.0, 0.0, 2.0e+3, -2.501250312499974e-7},
    {2.0, 0.0, 5.0e-1, 1.0e-3, 3.9999999713317203e+9},
    {2.0, 0.0, 5.0e-1, 4.0000000000000002e-1, 5.8074663159567264e+1},
    {2.0, 0.0, 5.0e-1, 6.0, 1.0403643076475396e-2},
    {2.0, 0.0, 5.0e-1, 2.0e+3, 2.5009374999023438e-10},
    {2.0, 2.5e-1, 2.5000000100000003e-1, -2.49e-1, 5.999988000026121e+12},
    {2.0, 2.5e-1, 2.5000000100000003e-1, 1.5000000000000002e-1, 2.3619525785965138e+2},
    {2.0, 2.5e-1, 2.5000000100000003e-1, 5.75, 1.1827828189563479e-2},
    {2.0, 2.5e-1, 2.5000000100000003e-1, 1.99975e+3, 2.501875624998045e-10},
    {2.0, 0.0, 9.9999999999999995e-7, 1.0e-3, 5.9880199700484127e+12},
    {2.0, 0.0, 9.9999999999999995e-7, 4.0000000000000002e-1, 2.3619408474319587e+2},
    {2.0, 0.0, 9.9999999999999995e-7, 6.0, 1.1827825001160168e-2},
    {2.0, 0.0, 9.9999999999999995e-7, 2.0e+3, 2.5018756231230461e-10},
    {2.0, 1.0, 3.5, -9.99e-1, 8.0000000086465866e+8},
    {2.0, 1.0, 3.5, -5.9999999999999998e-1, 1.2828961399899444e+1},
    {2.0, 1.0, 3.5, 5.0, 6.8900881796842294e-3},
    {2.0, 1.0, 3.5, 1.999e+3, 2.4971912456102684e-10},
    {2.0, 6.9999999999999996e-1, 0.0, 1.0e-3, 2.8571428514120663e+9},
    {2.0, 6.9999999999999996e-1, 0.0, 4.0000000000000002e-1, 4.3396673207477639e+1},
    {2.0, 6.9999999999999996e-1, 0.0, 6.0, 9.9169381206447435e-3},
    {2.0, 6.9999999999999996e-1, 0.0, 2.0e+3, 2.5005624249507965e-10},
    {2.0, 0.0, 0.0, 1.0e-3, 6.0000000000064686e+12},
    {2.0, 0.0, 0.0, 4.0000000000000002e-1, 2.3619525903394704e+2},
    {2.0, 0.0, 0.0, 6.0, 1.1827828192755075e-2},
    {2.0, 0.0, 0.0, 2.0e+3, 2.5018756249999219e-10},
    {5.0, 0.0, 5.0e-1, 1.0e-3, -2.3999999999999996e+20},
    {5.0, 0.0, 5.0e-1, 4.0000000000000002e-1, -5.816988213828402e+4},
    {5.0, 0.0, 5.0e-1, 6.0, -3.1953773584332062e-3},
    {5.0, 0.0, 5.0e-1, 2.0e+3, -1.876406249589844e-18},
    {5.0, 2.5e-1, 2.5000000100000003e-1, -2.49e-1, -7.1999748000664689e+23},
    {5.0, 2.5e-1, 2.5000000100000003e-1, 1.5000000000000002e-1, -4.3952316115341834e+5},
    {5.0, 2.5e-1, 2.5000000100000003e-1, 5.75, -4.100295486354072e-3},
    {5.0, 2.5e-1, 2.5000000100000003e-1, 1.99975e+3, -1.8778141406216904e-18},
    {5.0, 0.0, 9.9999999999999995e-7, 1.0e-3, -7.1748670491018455e+23},
    {5.0, 0.0, 9.9999999999999995e-7, 4.0000000000000002e-1, -4.3951931963638833e+5},
    {5.0, 0.0, 9.9999999999999995e-7, 6.0, -4.100293292072577e-3},
    {5.0, 0.0, 9.9999999999999995e-7, 2.0e+3, -1.8778141378070827e-18},
    {5.0, 1.0, 3.5, -9.99e-1, -4.7999999999999744e+19},
    {5.0, 1.0, 3.5, -5.9999999999999998e-1, -1.1725317176574932e+4},
    {5.0, 1.0, 3.5, 5.0, -1.5452162652310564e-3},
    {5.0, 1.0, 3.5, 1.999e+3, -1.8707910753231934e-18},
    {5.0, 6.9999999999999996e-1, 0.0, 1.0e-3, -1.7142857142857142e+20},
    {5.0, 6.9999999999999996e-1, 0.0, 4.0000000000000002e-1, -4.1777478511842556e+4},
    {5.0, 6.9999999999999996e-1, 0.0, 6.0, -2.9193950150320192e-3},
    {5.0, 6.9999999999999996e-1, 0.0, 2.0e+3, -1.8758435529183776e-18},
    {5.0, 0.0, 0.0, 1.0e-3, -7.199999999999999e+23},
    {5.0, 0.0, 0.0, 4.0000000000000002e-1, -4.3952316499880647e+5},
    {5.0, 0.0, 0.0, 6.0, -4.100295488550551e-3},
    {5.0, 0.0, 0.0, 2.0e+3, -1.8778141406245078e-18},
    {9.0, 0.0, 5.0e-1, 1.0e-3, -7.2575999999999985e+35},
    {9.0, 0.0, 5.0e-1, 4.0000000000000002e-1, -6.9193292663905707e+9},
    {9.0, 0.0, 5.0e-1, 6.0, -8.3316958349563511e-3},
    {9.0, 0.0, 5.0e-1, 2.0e+3, -3.5481796844545933e-28},
    {9.0, 2.5e-1, 2.5000000100000003e-1, -2.49e-1, -3.6287800416792544e+39},
    {9.0, 2.5e-1, 2.5000000100000003e-1, 1.5000000000000002e-1, -8.6517422648366737e+10},
    {9.0, 2.5e-1, 2.5000000100000003e-1, 5.75, -1.2433251780963942e-2},
    {9.0, 2.5e-1, 2.5000000100000003e-1, 1.99975e+3, -3.5526174960795875e-28},
    {9.0, 0.0, 9.9999999999999995e-7, 1.0e-3, -3.6089211748654729e+39},
    {9.0, 0.0, 9.9999999999999995e-7, 4.0000000000000002e-1, -8.6516234236181612e+10},
    {9.0, 0.0, 9.9999999999999995e-7, 6.0, -1.2433240790102247e-2},
    {9.0, 0.0, 9.9999999999999995e-7, 2.0e+3, -3.5526174872047087e-28},
    {9.0, 1.0, 3.5, -9.99e-1, -1.4515199999999871e+35},
    {9.0, 1.0, 3.5, -5.9999999999999998e-1, -1.384282381896901e+9},
    {9.0, 1.0, 3.5, 5.0, -3.0022716178805168e-3},
    {9.0, 1.0, 3.5, 1.999e+3, -3.5305095273430094e-28},
    {9.0, 6.9999999999999996e-1, 0.0, 1.0e-3, -5.1839999999999992e+35},
    {9.0, 6.9999999999999996e-1, 0.0, 4.0000000000000002e-1, -4.943665479469859e+9},
    {9.0, 6.9999999999999996e-1, 0.0, 6.0, -7.2508509560245233e-3},
    {9.0, 6.9999999999999996e-1, 0.0, 2.0e+3, -3.5464068364348974e-28},
    {9.0, 0.0, 0.0, 1.0e-3, -3.6287999999999992e+39},
    {9.0, 0.0, 0.0, 4.0000000000000002e-1, -8.6517423837980452e+10},
    {9.0, 0.0, 0.0, 6.0, -1.2433251791965813e-2},
    {9.0, 0.0, 0.0, 2.0e+3, -3.5526174960884713e-28},
};

struct ln_gamma_diff_row { double a; double b; double value; };
inline constexpr ln_gamma_diff_row ln_gamma_diff[] = {
    {5.0e-1, 1.5, -6.9314718055994531e-1},
    {1.0e-3, 4.0000000000000002e-1, -6.11050106768207},
    {1.0e+1, 1.05e+1, 1.138797739322294},
    {1.0e+4, 1.000025e+4, 2.3025757179159236},
    {3.0, 1.2, -7.7852127056326115e-1},
    {1.0e+6, 1.000007e+6, 9.6708594905704419e+1},
    {2.0, 2.0000000999999998, 4.2278436665324979e-8},
};

struct trigamma_sq_plus_tetragamma_row { double x; double value; };
inline constexpr trigamma_sq_plus_tetragamma_row trigamma_sq_plus_tetragamma[] = {
    {1.0e-3, 9.9800328506669194e+11},
    {5.0e-1, 7.5234761142662893},
    {1.0, 3.0169427795865691e-1},
    {1.9899999999999999e+1, 5.8681199510867658e-7},
    {2.0e+1, 5.7488213829566263e-7},
    {1.5e+2, 1.6681503866366034e-10},
    {1.0e+4, 8.3350001277744431e-18},
};

inline constexpr double q_at_root = 1.0334077521644995;

}  // namespace ref
