"""Chebyshev expansions of the Riemann-Siegel remainder terms C0..C4.

Each row holds Chebyshev coefficients (degree 56) of C_j on p in [0, 1],
evaluated as chebval(2*p - 1, row).  The C_j are combinations of derivatives
of psi(p) = cos(2*pi*(p^2 - p - 1/16)) / cos(2*pi*p); the direct formulas
have removable singularities at p = 1/4, 3/4, so the expansions were fitted
from 60-digit samples at Chebyshev nodes.
"""

import numpy as np

RS_CHEB_COEFFS = np.array([
    [
        6.42667286239768099e-01, -5.46351158758895375e-16, 2.71972999997855402e-01, -4.89755805355152043e-16,
        1.07386058193401634e-02, 1.88737914186276607e-16, -1.37438152963395002e-03, 2.22044604925031320e-17,
        -1.24682218803451306e-04, -2.60902410786911797e-16, -5.76459970347276056e-07, 1.94289029309402395e-16,
        2.72806743223386050e-07, 8.53483950180589140e-17, 8.07795363100271914e-09, 3.69149155687864422e-16,
        -2.08845601923357466e-10, 4.66293670342565569e-16, -1.31153310434228771e-11, 2.60902410786911698e-16,
        -1.39777078800307152e-14, 7.21644966006351776e-17, 1.00197627972420394e-14, 2.33146835171282834e-16,
        5.55111512312578085e-17, 9.38919081372446470e-17, -6.38378239159464838e-17, 4.44089209850062518e-17,
        1.05471187339389866e-16, -2.22044604925031234e-16, 3.88578058618804641e-16, 1.99840144432528108e-16,
        1.63064006741819818e-16, 6.38378239159464838e-17, 7.21644966006351776e-17, -7.21644966006351899e-17,
        1.22124532708767229e-16, 1.79023462720806546e-16, -1.77635683940025130e-16, 7.93809462606986966e-16,
        -4.26048085699904108e-16, 5.71764857681956447e-16, -8.75341465977897787e-16, -1.72084568816899441e-16,
        -1.38222766565832119e-15, 1.58206781009084861e-16, -5.59274848654922568e-16, 5.43315392675935864e-16,
        -2.26901830657766437e-16, -2.00534033822919038e-16, 0.00000000000000000e+00, -2.66453525910037954e-16,
        -4.14945855453652632e-16, 7.32747196252604066e-16, -1.08246744900952822e-16, 1.04360964314764778e-15,
        -2.77555756156289086e-16,
    ],
    [
        -1.57595700078429165e-17, 1.06979139210030237e-02, 1.11022302462515660e-17, 1.71706512433778928e-02,
        -5.03069808033274042e-18, 2.79321114978846319e-03, 0.00000000000000000e+00, -3.63756537192581859e-05,
        -4.51028103753969860e-18, -2.71089552311381044e-05, -5.20417042793042013e-19, -1.04837498666500439e-06,
        1.38777878078144575e-18, 5.88646716565000019e-08, -1.38777878078144537e-17, 4.32296726826999895e-09,
        8.32667268468867066e-18, -1.13695851344797166e-11, -2.08166817117216728e-18, -6.69983027390408171e-12,
        1.17961196366422833e-17, -1.00804607716664665e-13, 8.19656842399041445e-18, 5.15746299833974465e-15,
        2.08166817117216767e-18, 1.72431513512094561e-16, -1.94289029309402351e-17, 2.77555756156289073e-18,
        -4.07660016854549683e-18, 2.81025203108242675e-17, -7.97972798949331048e-18, 1.09287578986538813e-17,
        -1.59594559789866210e-17, 1.54390389361935807e-17, -1.21430643318376497e-17, 2.04697370165263280e-17,
        -3.46944695195361438e-19, 1.39645239816133014e-17, 2.84494650060196524e-17, 8.84708972748171557e-18,
        2.53269627492614015e-17, -4.42354486374086472e-18, 2.35922392732846005e-17, 1.26634813746307053e-17,
        3.69062419514066054e-17, -3.90312782094781750e-18, -6.93889390390722838e-18, -1.32272665043231510e-17,
        -3.98986399474665755e-18, 2.28983498828938709e-17, -1.38777878078144845e-18, 2.35922392732846098e-17,
        9.10729824887824495e-18, 1.89952220619460580e-17, 3.53883589099268807e-17, 1.31838984174237410e-17,
        4.30211422042248110e-17,
    ],
    [
        3.14611585398891008e-03, 3.03712133567501922e-18, -2.30878388453075074e-03, 2.07218140216292043e-18,
        5.76982076668998596e-05, -2.94902990916057198e-18, 3.52388620236662460e-04, 2.60208521396521055e-19,
        2.52466674586869686e-05, 1.64798730217796666e-18, -3.44282119719464776e-06, -1.97324795392361799e-18,
        -3.53507455663846376e-07, -9.97465998686664002e-19, 3.73083018090358770e-09, -2.11419423634673288e-18,
        1.27769518376910603e-09, -2.12503625807158807e-18, 2.18746143594572439e-11, -9.97465998686663810e-19,
        -1.91414245565013549e-12, -2.16840434497100887e-19, -6.56264105558524057e-14, -1.60461921527854625e-18,
        1.25987545049333024e-15, 6.51876556206909271e-19, 8.22042087178509265e-17, 3.90312782094781510e-19,
        -1.30104260698260527e-19, 2.58040117051549947e-18, -3.90312782094781461e-19, 2.38524477946810898e-19,
        -5.74627151417317138e-19, 6.72205346941012672e-19, 6.93889390390722876e-19, 2.21177243187042928e-18,
        6.93889390390722876e-19, 1.21430643318376547e-18, 1.06251812903579500e-18, -8.67361737988403595e-20,
        3.10081821330854476e-18, 4.33680868994202351e-19, 3.77844457111198696e-18, 3.29597460435593718e-18,
        5.81132364452230931e-18, 1.38777878078144614e-18, 2.61292723569006584e-18, -1.04083408558608403e-18,
        1.75369701399530388e-18, 1.37151574819416411e-18, 4.77048955893622856e-19, 2.34187669256869281e-18,
        1.66967134562767841e-18, -3.03576608295941559e-19, 1.73472347597680786e-18, -2.60208521396521199e-19,
        2.16840434497100848e-18,
    ],
    [
        -1.16062608813985186e-19, 7.12325622120389798e-05, 3.22550146314437579e-19, 2.32343052981648102e-04,
        -2.71050543121376124e-21, -1.29299120454724845e-04, 1.30104260698260527e-19, 1.80744964136716200e-05,
        -1.62630325872825659e-20, 6.52618518722063179e-06, -3.25260651745651258e-20, -1.16963653785218759e-07,
        5.96311194867027487e-20, -7.34947612653503594e-08, -1.30104260698260503e-19, -1.77509100789054289e-09,
        1.08420217248550404e-20, 2.55555296293109091e-10, -4.33680868994201557e-20, 1.13766365794111489e-11,
        4.33680868994201617e-20, -3.34986471070899971e-13, 1.54498809579184411e-19, -2.55372058135389064e-14,
        4.33680868994201617e-20, 6.78358194269867691e-17, -2.60208521396521006e-19, 2.97613496347270906e-17,
        -2.16840434497100899e-20, 5.63785129692462132e-19, -9.08019319456609626e-20, 4.33680868994201617e-20,
        -1.89735380184963204e-19, 2.11419423634673336e-19, -2.30392961653169692e-19, 1.40946282423115605e-19,
        -7.58941520739853056e-20, 9.62229428080885498e-20, 2.38524477946811091e-19, 2.00577401909818330e-19,
        2.35813972515597388e-19, -1.13841228110978139e-19, 2.73083422194786699e-19, 1.62630325872825834e-19,
        3.93023287525995694e-19, -3.25260651745651439e-20, -1.30104260698260527e-19, -1.20956304867914074e-19,
        -3.25260651745651439e-20, 2.71050543121376301e-19, 1.08420217248550660e-20, 2.05998412772246146e-19,
        -4.06575814682064524e-21, 6.97955148537544250e-20, 2.97816784254612163e-19, 3.11708124589582681e-20,
        3.63207727782643899e-19,
    ],
    [
        1.67657452466968553e-04, 2.62622565296195830e-19, -2.27287689434167370e-04, 2.39540917483516146e-19,
        6.47738718844570861e-05, -2.81892564846231162e-19, -8.49220050012509607e-06, 0.00000000000000000e+00,
        -2.61614072452157637e-06, 1.78893358460108222e-19, 8.33676496873170511e-07, -1.87024874753749524e-19,
        6.32470403753523638e-08, -1.19262238973405497e-19, -1.00599494032435001e-08, -2.22939071717331791e-19,
        -7.82267720674141348e-10, -2.16840434497100815e-19, 3.16765826730794868e-11, -1.19262238973405449e-19,
        3.50069433076999208e-12, -5.01443504774545825e-20, -1.43146345471523175e-14, -1.78893358460108198e-19,
        -7.26935059456451365e-15, 2.71050543121376018e-20, -8.77715868735639942e-17, -8.13151629364128145e-21,
        8.12880578821006888e-18, 2.00577401909818258e-19, 1.32814766129474255e-19, 1.08420217248550404e-20,
        4.06575814682063997e-21, 4.33680868994201677e-20, 4.60785923306339372e-20, 2.92734586571086265e-19,
        -3.52365706057788953e-20, 1.66696084019646365e-19, 5.14996031930614883e-20, -1.27393755267046776e-19,
        2.71050543121376301e-19, 4.33680868994202400e-20, 3.84552958053452787e-19, 3.30681662608079218e-19,
        6.61363325216158340e-19, 9.89334482393023133e-20, 2.39202104304614396e-19, -1.59919820441611865e-19,
        1.02999206386122953e-19, 1.72117094882073940e-19, 7.45388993583785743e-20, 2.65629532258948943e-19,
        1.49077798716757004e-19, -9.21571846612679708e-20, 1.77538105744501443e-19, -1.62630325872825761e-19,
        2.16840434497100839e-19,
    ],
])
