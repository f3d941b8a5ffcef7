"""Frozen coefficient tables for the d..j primitive family.

Generated by tools/gen_primitive_coefficients.py; do not edit by hand.
See that script for the derivation and the symbolic checks run
before freezing.  Layout per member name:

  P[name]   : ascending coefficients of the polynomial multiplying
              Gamma(0, x)
  R[name]   : {power: coefficient} of the log-free Laurent part of
              the small-x expansion:
              p(x) = -(EULER_GAMMA + ln x) * P(x) + sum_k R_k x^k
  ASY[name] : a_k with p(x) ~ exp(-x) * sum_{k>=1} a_k x^{-k}
  P_DD[name]  : P coefficients as (hi, lo) double-double pairs
  QP_DD[name] : polynomial part of Q, ascending, (hi, lo) pairs
  QL_DD[name] : coefficients of x^-1..x^-5 in Q, (hi, lo) pairs
"""

EULER_GAMMA = 0.5772156649015328606

R_SERIES_ORDER = 12
ASY_ORDER = 46

P = {
    "d": (0.0,),
    "e": (1.0,),
    "f": (0.0, 1.0,),
    "g": (-2.0, 0.0, 0.5,),
    "h": (0.0, -2.0, 0.0, 0.16666666666666666,),
    "i": (2.0, 0.0, -1.0, 0.0, 0.041666666666666664,),
    "j": (0.0, 2.0, 0.0, -0.3333333333333333, 0.0, 0.008333333333333333,),
}

R = {
    "d": {-5: -48.0, -3: 4.0, -1: -1.0, 0: 0.7333333333333333, 1: -0.3333333333333333, 2: 0.10952380952380952, 3: -0.027777777777777776, 4: 0.005687830687830688, 5: -0.0009722222222222222, 6: 0.00014229597562930897, 7: -1.8187830687830687e-05, 8: 2.0619812286478955e-06, 9: -2.099605274208449e-07, 10: 1.9399324954880512e-08, 11: -1.6403166204753507e-09, 12: 1.2784258426959953e-10},
    "e": {-4: 12.0, -2: -2.0, 0: 0.5, 1: 0.7333333333333333, 2: -0.16666666666666666, 3: 0.03650793650793651, 4: -0.006944444444444444, 5: 0.0011375661375661375, 6: -0.00016203703703703703, 7: 2.0327996518472707e-05, 8: -2.273478835978836e-06, 9: 2.291090254053217e-07, 10: -2.0996052742084488e-08, 11: 1.7635749958982281e-09, 12: -1.3669305170627923e-10},
    "f": {-3: -4.0, -1: 2.0, 0: -2.3333333333333335, 1: 1.5, 2: 0.36666666666666664, 3: -0.05555555555555555, 4: 0.009126984126984128, 5: -0.001388888888888889, 6: 0.00018959435626102292, 7: -2.3148148148148147e-05, 8: 2.5409995648090884e-06, 9: -2.52608759553204e-07, 10: 2.291090254053217e-08, 11: -1.9087320674622262e-09, 12: 1.46964582991519e-10},
    "g": {-2: 2.0, 0: -0.5, 1: -2.3333333333333335, 2: 1.0, 3: 0.12222222222222222, 4: -0.013888888888888888, 5: 0.0018253968253968255, 6: -0.0002314814814814815, 7: 2.708490803728899e-05, 8: -2.8935185185185184e-06, 9: 2.823332849787876e-07, 10: -2.52608759553204e-08, 11: 2.082809321866561e-09, 12: -1.5906100562185218e-10},
    "h": {-1: -2.0, 0: 3.6666666666666665, 1: -2.5, 2: -1.1666666666666667, 3: 0.3888888888888889, 4: 0.030555555555555555, 5: -0.002777777777777778, 6: 0.00030423280423280425, 7: -3.306878306878307e-05, 8: 3.3856135046611237e-06, 9: -3.2150205761316875e-07, 10: 2.8233328497878764e-08, 11: -2.2964432686654908e-09, 12: 1.7356744348888008e-10},
    "i": {0: -0.75, 1: 3.6666666666666665, 2: -1.75, 3: -0.3888888888888889, 4: 0.1076388888888889, 5: 0.006111111111111111, 6: -0.000462962962962963, 7: 4.346182917611489e-05, 8: -4.133597883597884e-06, 9: 3.761792782956804e-07, 10: -3.2150205761316875e-08, 11: 2.5666662270798876e-09, 12: -1.913702723887909e-10},
    "j": {0: -1.5333333333333334, 1: 1.25, 2: 1.8333333333333333, 3: -0.6944444444444444, 4: -0.09722222222222222, 5: 0.023194444444444445, 6: 0.0010185185185185184, 7: -6.613756613756614e-05, 8: 5.432728647014361e-06, 9: -4.592886537330982e-07, 10: 3.761792782956804e-08, 11: -2.922745978301534e-09, 12: 2.138888522566573e-10},
}

ASY = {
    "d": (
        -1.0, -4.0, -20.0, -48.0,
        -48.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0,
        0.0, 0.0,
    ),
    "e": (
        1.0, 3.0, 14.0, 6.0,
        24.0, -120.0, 720.0, -5040.0,
        40320.0, -362880.0, 3628800.0, -39916800.0,
        479001600.0, -6227020800.0, 87178291200.0, -1307674368000.0,
        20922789888000.0, -355687428096000.0, 6402373705728000.0, -1.21645100408832e+17,
        2.43290200817664e+18, -5.109094217170944e+19, 1.1240007277776077e+21, -2.585201673888498e+22,
        6.204484017332394e+23, -1.5511210043330986e+25, 4.0329146112660565e+26, -1.0888869450418352e+28,
        3.0488834461171387e+29, -8.841761993739702e+30, 2.6525285981219107e+32, -8.222838654177922e+33,
        2.631308369336935e+35, -8.683317618811886e+36, 2.9523279903960416e+38, -1.0333147966386145e+40,
        3.7199332678990125e+41, -1.3763753091226346e+43, 5.230226174666011e+44, -2.0397882081197444e+46,
        8.159152832478977e+47, -3.345252661316381e+49, 1.40500611775288e+51, -6.041526306337383e+52,
        2.658271574788449e+54, -1.1962222086548019e+56,
    ),
    "f": (
        -1.0, -2.0, -10.0, 24.0,
        -120.0, 720.0, -5040.0, 40320.0,
        -362880.0, 3628800.0, -39916800.0, 479001600.0,
        -6227020800.0, 87178291200.0, -1307674368000.0, 20922789888000.0,
        -355687428096000.0, 6402373705728000.0, -1.21645100408832e+17, 2.43290200817664e+18,
        -5.109094217170944e+19, 1.1240007277776077e+21, -2.585201673888498e+22, 6.204484017332394e+23,
        -1.5511210043330986e+25, 4.0329146112660565e+26, -1.0888869450418352e+28, 3.0488834461171387e+29,
        -8.841761993739702e+30, 2.6525285981219107e+32, -8.222838654177922e+33, 2.631308369336935e+35,
        -8.683317618811886e+36, 2.9523279903960416e+38, -1.0333147966386145e+40, 3.7199332678990125e+41,
        -1.3763753091226346e+43, 5.230226174666011e+44, -2.0397882081197444e+46, 8.159152832478977e+47,
        -3.345252661316381e+49, 1.40500611775288e+51, -6.041526306337383e+52, 2.658271574788449e+54,
        -1.1962222086548019e+56, 5.502622159812089e+57,
    ),
    "g": (
        1.0, 1.0, 8.0, -48.0,
        312.0, -2280.0, 18720.0, -171360.0,
        1733760.0, -19232640.0, 232243200.0, -3033676800.0,
        42631142400.0, -641383142400.0, 10287038361600.0, -175228365312000.0,
        3159341273088000.0, -6.0111175348224e+16, 1.203646256676864e+18, -2.5302180885037056e+19,
        5.5713455987245056e+20, -1.2823826485099069e+22, 3.079761994110645e+23, -7.703900988187723e+24,
        2.0040483375983635e+26, -5.413412305122514e+27, 1.5163758938360372e+29, -4.3991032579690143e+30,
        1.320166532168721e+32, -4.093735803101482e+33, 1.3103491274722238e+35, -4.3252131320975875e+36,
        1.4709013784593468e+38, -5.1492073479554485e+39, 1.854061977968714e+41, -6.861210249680401e+42,
        2.6076732207972076e+44, -1.0171413534416269e+46, 4.0691159638901565e+47, -1.668546754241951e+49,
        7.008712283099442e+50, -3.014072647846059e+52, 1.3263257751587186e+54, -5.969027990661335e+55,
        2.7459945367564675e+57, -1.2907237631385313e+59,
    ),
    "h": (
        -1.0, 0.0, -8.0, 72.0,
        -600.0, 5280.0, -50400.0, 524160.0,
        -5927040.0, 72576000.0, -958003200.0, 13571712000.0,
        -205491686400.0, 3312775065600.0, -56665889280000.0, 1025216704512000.0,
        -1.956280854528e+16, 3.92678920617984e+17, -8.271866827800576e+18, 1.82467650613248e+20,
        -4.2064875721374103e+21, 1.011600654999847e+23, -2.5334976404107275e+24, 6.597434671763446e+25,
        -1.7837891549830635e+27, 5.0008141179699095e+28, -1.4518492600557802e+30, 4.359903327947508e+31,
        -1.3527895850421745e+33, 4.3324633769324535e+34, -1.4307739258269587e+36, 4.867920483273331e+37,
        -1.7048246924934004e+39, 6.140842220023767e+40, -2.273292552604952e+42, 8.642644959085372e+43,
        -3.3721195073504546e+45, 1.349398353063831e+47, -5.534625338031573e+48, 2.3253585572565085e+50,
        -1.0002305457335979e+52, 4.402352502292357e+53, -1.9816206284786618e+55, 9.11787150152438e+56,
        -4.2864629143463735e+58, 2.0579806877697214e+60,
    ),
    "i": (
        1.0, -1.0, 10.0, -102.0,
        1008.0, -10320.0, 112320.0, -1310400.0,
        16410240.0, -220268160.0, 3160684800.0, -48339244800.0,
        785562624000.0, -13525089177600.0, 246017137766400.0, -4715473771008000.0,
        9.5010388881408e+16, -2.00785553160192e+18, 4.441326639663514e+19, -1.0263197121493155e+21,
        2.4732881815123723e+22, -6.205505836175828e+23, 1.618561047999755e+25, -4.382433877575781e+26,
        1.230163046116494e+28, -3.575489027088226e+29, 1.0748120730485168e+31, -3.337982930025746e+32,
        1.0699141789114262e+34, -3.535997456536382e+35, 1.2038766295436104e+37, -4.218809599912525e+38,
        1.5205015412213481e+40, -5.631739308032825e+41, 2.142120619991656e+43, -8.361686665879332e+44,
        3.347419150451605e+46, -1.373484920973477e+48, 5.77270523350237e+49, -2.483890896791575e+51,
        1.09357941328999e+53, -4.923910844718194e+54, 2.2662046176295077e+56, -1.065646700595932e+58,
        5.117491774056738e+59, -2.5086693671025046e+61,
    ),
    "j": (
        -1.0, 2.0, -14.0, 144.0,
        -1584.0, 18240.0, -221760.0, 2862720.0,
        -39312000.0, 574076160.0, -8901446400.0, 146255155200.0,
        -2540624486400.0, 46553207500800.0, -897762042777600.0, 1.8181904412672e+16,
        -3.8592085948416e+17, 8.56851014283264e+18, -1.9864644896762266e+20, 4.800602242534146e+21,
        -1.2074492666580664e+23, 3.1561940435995223e+24, -8.562187943918704e+25, 2.40754661485888e+27,
        -7.008274921777806e+28, 2.109617633153274e+30, -6.5598179192470295e+31, 2.1049491311992724e+33,
        -6.963771746269389e+34, 2.373093552071761e+36, -8.3231572857588935e+37, 3.0020597185765095e+39,
        -1.1127092640666179e+41, 4.235114502223121e+42, -1.6541509927550268e+44, 6.625697141230527e+45,
        -2.71999288588815e+47, 1.1437458598759633e+49, -4.923504790878898e+50, 2.1685559581219277e+52,
        -9.7678032457777e+53, 4.4971904152406765e+55, -2.1154404361640348e+57, 1.0162040576101282e+59,
        -4.983047030890238e+60, 2.4932381006108575e+62,
    ),
}

P_DD = {
    "d": ((0.0, 0.0),),
    "e": ((1.0, 0.0),),
    "f": ((0.0, 0.0), (1.0, 0.0),),
    "g": ((-2.0, 0.0), (0.0, 0.0), (0.5, 0.0),),
    "h": ((0.0, 0.0), (-2.0, 0.0), (0.0, 0.0), (0.16666666666666666, 9.25185853854297e-18),),
    "i": ((2.0, 0.0), (0.0, 0.0), (-1.0, 0.0), (0.0, 0.0), (0.041666666666666664, 2.3129646346357427e-18),),
    "j": ((0.0, 0.0), (2.0, 0.0), (0.0, 0.0), (-0.3333333333333333, -1.850371707708594e-17), (0.0, 0.0), (0.008333333333333333, 1.1564823173178714e-19),),
}

QP_DD = {
    "d": ((0.0, 0.0),),
    "e": ((0.0, 0.0),),
    "f": ((-1.0, 0.0),),
    "g": ((0.5, 0.0), (-0.5, 0.0),),
    "h": ((1.6666666666666667, -7.401486830834377e-17), (0.16666666666666666, 9.25185853854297e-18), (-0.16666666666666666, -9.25185853854297e-18),),
    "i": ((-0.75, 0.0), (0.9166666666666666, 3.700743415417188e-17), (0.041666666666666664, 2.3129646346357427e-18), (-0.041666666666666664, -2.3129646346357427e-18),),
    "j": ((-1.5333333333333334, 1.0362081563168128e-16), (-0.2833333333333333, -7.401486830834377e-18), (0.31666666666666665, 1.4802973661668754e-17), (0.008333333333333333, 1.1564823173178714e-19), (-0.008333333333333333, -1.1564823173178714e-19),),
}

QL_DD = {
    "d": ((-1.0, 0.0), (-4.0, 0.0), (-20.0, 0.0), (-48.0, 0.0), (-48.0, 0.0),),
    "e": ((0.0, 0.0), (4.0, 0.0), (12.0, 0.0), (12.0, 0.0),),
    "f": ((0.0, 0.0), (-4.0, 0.0), (-4.0, 0.0),),
    "g": ((2.0, 0.0), (2.0, 0.0),),
    "h": ((-2.0, 0.0),),
    "i": (),
    "j": (),
}
