// Reference table computed with 50-digit arithmetic.
// Row: (kind, p1_re, p1_im, p2_re, p2_im, x, want_re, want_im)
// kind 0: gamma(p1). kind 1: whittaker_w(kappa = p1_re, mu = p2, x).
pub const ORACLE: [(u8, f64, f64, f64, f64, f64, f64, f64); 200] = [
    (0, -2.35000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.24714182328178280e+00, 0.00000000000000000e+00),
    (0, -2.35000000000000009e+00, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -4.17659448302917458e-01, -4.57575235768288235e-01),
    (0, -2.35000000000000009e+00, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -4.17659448302917458e-01, 4.57575235768288235e-01),
    (0, -2.35000000000000009e+00, 1.30000000000000004e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.51566151410006920e-02, -4.73665395869357977e-02),
    (0, -2.35000000000000009e+00, 2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 5.89552648602066631e-03, -1.81632188111301119e-03),
    (0, -2.35000000000000009e+00, -2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 5.89552648602066631e-03, 1.81632188111301119e-03),
    (0, -2.35000000000000009e+00, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 8.11521215683825332e-07, -2.95938912720098317e-06),
    (0, -2.35000000000000009e+00, -9.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -2.12013373020988397e-02, 1.49219869050069759e-01),
    (0, -1.19999999999999996e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.85095714052209814e+00, 0.00000000000000000e+00),
    (0, -1.19999999999999996e+00, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 8.11331894929095077e-01, 1.53555436684348967e+00),
    (0, -1.19999999999999996e+00, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 8.11331894929095077e-01, -1.53555436684348967e+00),
    (0, -1.19999999999999996e+00, 1.30000000000000004e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -2.72207468904433030e-02, 1.47948661857895736e-01),
    (0, -1.19999999999999996e+00, 2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.75002019528921228e-02, 1.43395697133283789e-02),
    (0, -1.19999999999999996e+00, -2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.75002019528921228e-02, -1.43395697133283789e-02),
    (0, -1.19999999999999996e+00, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.38099460067176037e-05, 1.94752613544051883e-05),
    (0, -1.19999999999999996e+00, -9.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.44031125695567505e-02, -4.19889849730393117e-01),
    (0, -6.99999999999999956e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -4.27366998241084328e+00, 0.00000000000000000e+00),
    (0, -6.99999999999999956e-01, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.82303140384211937e+00, 9.11401137212243806e-01),
    (0, -6.99999999999999956e-01, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.82303140384211937e+00, -9.11401137212243806e-01),
    (0, -6.99999999999999956e-01, 1.30000000000000004e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -2.06665693483715329e-01, 3.73763135122242088e-02),
    (0, -6.99999999999999956e-01, 2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.32152110211065416e-02, -1.41756088033272044e-02),
    (0, -6.99999999999999956e-01, -2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.32152110211065416e-02, 1.41756088033272044e-02),
    (0, -6.99999999999999956e-01, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.66954473062337656e-05, 5.44118633756789178e-05),
    (0, -6.99999999999999956e-01, -9.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -5.14069672779101539e-01, -2.00493264213043448e-01),
    (0, 3.09999999999999998e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 2.89033605401171467e+00, 0.00000000000000000e+00),
    (0, 3.09999999999999998e-01, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 9.26895470045750236e-01, -1.33144549205179352e+00),
    (0, 3.09999999999999998e-01, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 9.26895470045750236e-01, 1.33144549205179352e+00),
    (0, 3.09999999999999998e-01, 1.30000000000000004e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.01408482353847057e-01, -2.93848115167790080e-01),
    (0, 3.09999999999999998e-01, 2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 5.44076569755525263e-02, -5.93735937985269274e-02),
    (0, 3.09999999999999998e-01, -2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 5.44076569755525263e-02, 5.93735937985269274e-02),
    (0, 3.09999999999999998e-01, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -2.90360395907325131e-04, -1.36827561355573173e-04),
    (0, 3.09999999999999998e-01, -9.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.90002803425063233e-01, 5.98768902013725901e-01),
    (0, 5.00000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.77245385090551610e+00, 0.00000000000000000e+00),
    (0, 5.00000000000000000e-01, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.02266900322137588e+00, -7.80002324309565176e-01),
    (0, 5.00000000000000000e-01, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.02266900322137588e+00, 7.80002324309565176e-01),
    (0, 5.00000000000000000e-01, 1.30000000000000004e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.95613384842744542e-01, -2.59820354142511867e-01),
    (0, 5.00000000000000000e-01, 2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 8.02553725664482409e-02, -4.61435908489084834e-02),
    (0, 5.00000000000000000e-01, -2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 8.02553725664482409e-02, 4.61435908489084834e-02),
    (0, 5.00000000000000000e-01, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.26999831484027156e-04, -2.99849218317697452e-04),
    (0, 5.00000000000000000e-01, -9.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 3.56997197701392599e-01, 4.92948140367338583e-01),
    (0, 1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, 0.00000000000000000e+00),
    (0, 1.00000000000000000e+00, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 8.63379113885264671e-01, -1.81457125815196768e-01),
    (0, 1.00000000000000000e+00, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 8.63379113885264671e-01, 1.81457125815196768e-01),
    (0, 1.00000000000000000e+00, 1.30000000000000004e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 3.60356222985373786e-01, -8.78861052669992621e-02),
    (0, 1.00000000000000000e+00, 2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.31387221517863889e-01, 2.71070502460171170e-02),
    (0, 1.00000000000000000e+00, -2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.31387221517863889e-01, -2.71070502460171170e-02),
    (0, 1.00000000000000000e+00, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -6.86686314188882449e-05, -1.03821773169157487e-03),
    (0, 1.00000000000000000e+00, -9.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 5.52328332922556342e-01, 1.75145907186570887e-01),
    (0, 2.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.32934038817913702e+00, 0.00000000000000000e+00),
    (0, 2.50000000000000000e+00, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.22737657134826406e+00, 3.57933831234457267e-01),
    (0, 2.50000000000000000e+00, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.22737657134826406e+00, -3.57933831234457267e-01),
    (0, 2.50000000000000000e+00, 1.30000000000000004e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.91656339018351041e-01, 7.52825933485097076e-01),
    (0, 2.50000000000000000e+00, 2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -9.99315820277849598e-02, 5.05958107286087699e-01),
    (0, 2.50000000000000000e+00, -2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -9.99315820277849598e-02, -5.05958107286087699e-01),
    (0, 2.50000000000000000e+00, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.29448364302734726e-02, 5.24855379404777674e-03),
    (0, 2.50000000000000000e+00, -9.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 8.65886820799125934e-01, -6.72171844284547015e-01),
    (0, 3.70000000000000018e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.17065178379660395e+00, 0.00000000000000000e+00),
    (0, 3.70000000000000018e+00, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 3.63145978777369338e+00, 1.83495774261697631e+00),
    (0, 3.70000000000000018e+00, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 3.63145978777369338e+00, -1.83495774261697631e+00),
    (0, 3.70000000000000018e+00, 1.30000000000000004e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 6.49199524479511375e-02, 3.22982164497127355e+00),
    (0, 3.70000000000000018e+00, 2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.85982529596651958e+00, 1.16234015269686175e+00),
    (0, 3.70000000000000018e+00, -2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.85982529596651958e+00, -1.16234015269686175e+00),
    (0, 3.70000000000000018e+00, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -2.06265816574583843e-02, 1.20227138519357318e-01),
    (0, 3.70000000000000018e+00, -9.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.79539271913838161e+00, -3.21713091531220963e+00),
    (0, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 5.23427777845535189e+01, 0.00000000000000000e+00),
    (0, 5.50000000000000000e+00, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.11704138355190778e+01, 3.09652486380967531e+01),
    (0, 5.50000000000000000e+00, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.11704138355190778e+01, -3.09652486380967531e+01),
    (0, 5.50000000000000000e+00, 1.30000000000000004e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -2.26991000698861960e+01, 3.80531843203371949e+01),
    (0, 5.50000000000000000e+00, 2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.26066010094740264e+01, -1.00831868230692283e+01),
    (0, 5.50000000000000000e+00, -2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.26066010094740264e+01, 1.00831868230692283e+01),
    (0, 5.50000000000000000e+00, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -3.76066948899353903e+00, -1.06882879117802121e+00),
    (0, 5.50000000000000000e+00, -9.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 5.59281034269714983e+00, -4.79786217999132845e+01),
    (0, 7.20000000000000018e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.05031781666268284e+03, 0.00000000000000000e+00),
    (0, 7.20000000000000018e+00, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.51257007379694869e+02, 7.16108005147779295e+02),
    (0, 7.20000000000000018e+00, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.51257007379694869e+02, -7.16108005147779295e+02),
    (0, 7.20000000000000018e+00, 1.30000000000000004e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -7.32372339053604264e+02, 5.67960935782888669e+02),
    (0, 7.20000000000000018e+00, 2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -4.79601848410870218e+02, -5.89722607913545062e+02),
    (0, 7.20000000000000018e+00, -2.10000000000000009e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -4.79601848410870218e+02, 5.89722607913545062e+02),
    (0, 7.20000000000000018e+00, 5.50000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.21991670334297453e+00, -1.34905215929955375e+02),
    (0, 7.20000000000000018e+00, -9.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, -1.42520820964355522e+02, -9.78672954458631352e+02),
    (1, 6.50000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 1.69999999999999996e+00, 5.97339320189253953e-01, 0.00000000000000000e+00),
    (1, -3.49999999999999978e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 4.70000000000000000e+01, 1.59357877657070275e-11, 0.00000000000000000e+00),
    (1, 3.49999999999999978e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 1.10000000000000000e+01, 9.44320502745887337e-03, 0.00000000000000000e+00),
    (1, -6.50000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 5.99999999999999978e-01, 4.27939347271092230e-01, 0.00000000000000000e+00),
    (1, 9.00000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 3.40000000000000000e+01, 9.84733528789479325e-07, 0.00000000000000000e+00),
    (1, -9.99999999999999778e-02, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 7.29999999999999982e+00, 2.04048495281128686e-02, 0.00000000000000000e+00),
    (1, 9.99999999999999778e-02, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 1.10000000000000001e-01, 5.34833403656065687e-01, 0.00000000000000000e+00),
    (1, -9.00000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 2.60000000000000000e+01, 1.12230835228970295e-07, 0.00000000000000000e+00),
    (1, 9.49999999999999956e-01, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 3.89999999999999991e+00, 5.12806459234748879e-01, 0.00000000000000000e+00),
    (1, -4.99999999999999889e-02, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 2.00000000000000004e-02, 7.39843970156669695e-01, 0.00000000000000000e+00),
    (1, 4.99999999999999889e-02, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 1.85000000000000000e+01, 1.10964350864431764e-04, 0.00000000000000000e+00),
    (1, -9.49999999999999956e-01, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 1.69999999999999996e+00, 1.35604324781782942e-01, 0.00000000000000000e+00),
    (1, 2.24999999999999978e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 4.70000000000000000e+01, 1.47796845830684011e-10, 0.00000000000000000e+00),
    (1, -7.75000000000000022e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 1.10000000000000000e+01, 5.60292583401524893e-04, 0.00000000000000000e+00),
    (1, 7.75000000000000022e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 5.99999999999999978e-01, 4.52620317279087525e-01, 0.00000000000000000e+00),
    (1, -2.24999999999999978e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 3.40000000000000000e+01, 1.84498404184644631e-08, 0.00000000000000000e+00),
    (1, 9.49999999999999956e-01, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 7.29999999999999982e+00, 1.68538521234569250e-01, 0.00000000000000000e+00),
    (1, -5.00000000000000444e-02, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 1.10000000000000001e-01, 6.60016018680498306e-01, 0.00000000000000000e+00),
    (1, 5.00000000000000444e-02, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 2.60000000000000000e+01, 2.64643649996203475e-06, 0.00000000000000000e+00),
    (1, -9.49999999999999956e-01, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 3.89999999999999991e+00, 2.68122789306399142e-02, 0.00000000000000000e+00),
    (1, 7.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 2.00000000000000004e-02, -6.09059360636816927e-02, -3.86998735462920579e-59),
    (1, -2.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 1.85000000000000000e+01, 4.46721204450975688e-05, -7.88981493951692068e-60),
    (1, 2.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 1.69999999999999996e+00, 4.42050717139899407e-01, -2.12726335701772256e-55),
    (1, -7.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 4.70000000000000000e+01, 3.34691141088334570e-12, 8.52297122720806281e-69),
    (1, 5.99999999999999978e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 1.10000000000000000e+01, 1.63806492855111951e-02, 1.15445603034884943e-57),
    (1, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 5.99999999999999978e-01, 3.24579400663305484e-01, -1.22001589560457596e-56),
    (1, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 3.40000000000000000e+01, 1.66876578511148197e-07, 2.20114072160354494e-61),
    (1, -5.99999999999999978e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 7.29999999999999982e+00, 6.42757593253026702e-03, 9.15062144482892814e-58),
    (1, 6.50000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 1.10000000000000001e-01, 2.06509807377791677e-01, 0.00000000000000000e+00),
    (1, -3.49999999999999978e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 2.60000000000000000e+01, 7.03838867039546699e-07, 0.00000000000000000e+00),
    (1, 3.49999999999999978e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 3.89999999999999991e+00, 2.28059443738107742e-01, 0.00000000000000000e+00),
    (1, -6.50000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 2.00000000000000004e-02, 4.85920217293510537e-01, 0.00000000000000000e+00),
    (1, 9.00000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 1.85000000000000000e+01, 1.31689727982827257e-03, 0.00000000000000000e+00),
    (1, -9.99999999999999778e-02, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 1.69999999999999996e+00, 3.51228322233356094e-01, 0.00000000000000000e+00),
    (1, 9.99999999999999778e-02, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 4.70000000000000000e+01, 9.11718789691330180e-11, 0.00000000000000000e+00),
    (1, -9.00000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 1.10000000000000000e+01, 4.04717262228491818e-04, 0.00000000000000000e+00),
    (1, 9.49999999999999956e-01, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 5.99999999999999978e-01, 4.25836257913035587e-01, 0.00000000000000000e+00),
    (1, -4.99999999999999889e-02, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 3.40000000000000000e+01, 3.45662817809945068e-08, 0.00000000000000000e+00),
    (1, 4.99999999999999889e-02, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 7.29999999999999982e+00, 2.85579980376938838e-02, 0.00000000000000000e+00),
    (1, -9.49999999999999956e-01, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 1.10000000000000001e-01, 6.70699344825832044e-01, 0.00000000000000000e+00),
    (1, 2.24999999999999978e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 2.60000000000000000e+01, 4.69249944346634940e-06, 0.00000000000000000e+00),
    (1, -7.75000000000000022e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 3.89999999999999991e+00, 3.65060699972961714e-02, 0.00000000000000000e+00),
    (1, 7.75000000000000022e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 2.00000000000000004e-02, -3.93552253819626219e-03, 0.00000000000000000e+00),
    (1, -2.24999999999999978e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 1.85000000000000000e+01, 4.85482278001775081e-05, 0.00000000000000000e+00),
    (1, 9.49999999999999956e-01, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 1.69999999999999996e+00, 6.52345708345980380e-01, 0.00000000000000000e+00),
    (1, -5.00000000000000444e-02, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 4.70000000000000000e+01, 5.10863099732712521e-11, 0.00000000000000000e+00),
    (1, 5.00000000000000444e-02, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 1.10000000000000000e+01, 4.55335384963162764e-03, 0.00000000000000000e+00),
    (1, -9.49999999999999956e-01, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 5.99999999999999978e-01, 3.45929599581708769e-01, 0.00000000000000000e+00),
    (1, 7.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 3.40000000000000000e+01, 5.79136671961144198e-07, 7.23802036429074826e-62),
    (1, -2.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 7.29999999999999982e+00, 1.45085728891242664e-02, 6.32738836952740809e-57),
    (1, 2.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 1.10000000000000001e-01, 2.97264509395665621e-01, -1.21063456088365311e-55),
    (1, -7.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 2.60000000000000000e+01, 1.84456857514173622e-07, 1.01356183479087040e-61),
    (1, 5.99999999999999978e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 3.89999999999999991e+00, 2.81018352944898242e-01, 3.09165758727574439e-55),
    (1, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 2.00000000000000004e-02, -2.46894608461801536e-03, 1.32476117767755713e-57),
    (1, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 1.85000000000000000e+01, 2.99642978686303794e-04, 1.27183200038404733e-58),
    (1, -5.99999999999999978e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 1.69999999999999996e+00, 1.64051356483796901e-01, -8.55131795234639737e-56),
    (1, 6.50000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 4.70000000000000000e+01, 7.59905907323398835e-10, 0.00000000000000000e+00),
    (1, -3.49999999999999978e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 1.10000000000000000e+01, 1.66464201483490135e-03, 0.00000000000000000e+00),
    (1, 3.49999999999999978e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 5.99999999999999978e-01, 6.07180589027484174e-01, 0.00000000000000000e+00),
    (1, -6.50000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 3.40000000000000000e+01, 4.03109398619254820e-09, 0.00000000000000000e+00),
    (1, 9.00000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 7.29999999999999982e+00, 1.52249174151393107e-01, 0.00000000000000000e+00),
    (1, -9.99999999999999778e-02, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 1.10000000000000001e-01, 5.92599397391553762e-01, 0.00000000000000000e+00),
    (1, 9.99999999999999778e-02, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 2.60000000000000000e+01, 3.11259944361090753e-06, 0.00000000000000000e+00),
    (1, -9.00000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 3.89999999999999991e+00, 2.90686273064641107e-02, 0.00000000000000000e+00),
    (1, 9.49999999999999956e-01, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 2.00000000000000004e-02, -1.16207466642483624e-02, 0.00000000000000000e+00),
    (1, -4.99999999999999889e-02, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 1.85000000000000000e+01, 8.24600198519588422e-05, 0.00000000000000000e+00),
    (1, 4.99999999999999889e-02, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 1.69999999999999996e+00, 4.31227937421202190e-01, 0.00000000000000000e+00),
    (1, -9.49999999999999956e-01, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 4.70000000000000000e+01, 1.54287390412106278e-12, 0.00000000000000000e+00),
    (1, 2.24999999999999978e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 1.10000000000000000e+01, 6.96786659168527854e-03, 0.00000000000000000e+00),
    (1, -7.75000000000000022e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 5.99999999999999978e-01, 3.88375059973250947e-01, 0.00000000000000000e+00),
    (1, 7.75000000000000022e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 3.40000000000000000e+01, 6.35333233146706464e-07, 0.00000000000000000e+00),
    (1, -2.24999999999999978e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 7.29999999999999982e+00, 1.56181918806400852e-02, 0.00000000000000000e+00),
    (1, 9.49999999999999956e-01, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 1.10000000000000001e-01, 7.59308971881622434e-03, 0.00000000000000000e+00),
    (1, -5.00000000000000444e-02, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 2.60000000000000000e+01, 1.90354945129123109e-06, 0.00000000000000000e+00),
    (1, 5.00000000000000444e-02, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 3.89999999999999991e+00, 1.47819722511167817e-01, 0.00000000000000000e+00),
    (1, -9.49999999999999956e-01, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 2.00000000000000004e-02, 5.53700795999520379e-01, 0.00000000000000000e+00),
    (1, 7.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 1.85000000000000000e+01, 8.47222887062160177e-04, -1.52766244898580887e-58),
    (1, -2.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 1.69999999999999996e+00, 2.82921297361143076e-01, -8.88353386234361869e-56),
    (1, 2.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 4.70000000000000000e+01, 1.62210817752273516e-10, 3.21386303321677834e-66),
    (1, -7.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 1.10000000000000000e+01, 5.89927521028767729e-04, 3.79836267823999552e-58),
    (1, 5.99999999999999978e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 5.99999999999999978e-01, 2.53023390695744643e-01, 1.00420654508567558e-55),
    (1, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 3.40000000000000000e+01, 9.71713636107500695e-09, 3.90401629822872079e-63),
    (1, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 7.29999999999999982e+00, 5.35037390254169062e-02, 7.87756718009266429e-57),
    (1, -5.99999999999999978e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 1.10000000000000001e-01, 1.94676918585107855e-01, -1.72375053597398773e-57),
    (1, 6.50000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 2.60000000000000000e+01, 1.87747710925447692e-05, 0.00000000000000000e+00),
    (1, -3.49999999999999978e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 3.89999999999999991e+00, 7.65024902188731204e-02, 0.00000000000000000e+00),
    (1, 3.49999999999999978e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 2.00000000000000004e-02, 2.23815135056099124e-01, 0.00000000000000000e+00),
    (1, -6.50000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 1.85000000000000000e+01, 1.35054497584603283e-05, 0.00000000000000000e+00),
    (1, 9.00000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 1.69999999999999996e+00, 6.30049151102068383e-01, 0.00000000000000000e+00),
    (1, -9.99999999999999778e-02, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 4.70000000000000000e+01, 4.20378352493987950e-11, 0.00000000000000000e+00),
    (1, 9.99999999999999778e-02, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 1.10000000000000000e+01, 5.12553045939266247e-03, 0.00000000000000000e+00),
    (1, -9.00000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 5.99999999999999978e-01, 3.47881546388151330e-01, 0.00000000000000000e+00),
    (1, 9.49999999999999956e-01, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 3.40000000000000000e+01, 1.17857353911759641e-06, 0.00000000000000000e+00),
    (1, -4.99999999999999889e-02, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 7.29999999999999982e+00, 2.31285065303311888e-02, 0.00000000000000000e+00),
    (1, 4.99999999999999889e-02, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 1.10000000000000001e-01, 7.76929841085835071e-01, 0.00000000000000000e+00),
    (1, -9.49999999999999956e-01, 0.00000000000000000e+00, 3.99999999999999967e-01, 0.00000000000000000e+00, 2.60000000000000000e+01, 9.54221627046772395e-08, 0.00000000000000000e+00),
    (1, 2.24999999999999978e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 3.89999999999999991e+00, 1.90301155036616793e-01, 0.00000000000000000e+00),
    (1, -7.75000000000000022e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 2.00000000000000004e-02, 4.84583601380172480e-01, 0.00000000000000000e+00),
    (1, 7.75000000000000022e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 1.85000000000000000e+01, 9.18776310151141152e-04, 0.00000000000000000e+00),
    (1, -2.24999999999999978e-01, 0.00000000000000000e+00, 7.49999999999999833e-02, 0.00000000000000000e+00, 1.69999999999999996e+00, 3.09971308380903032e-01, 0.00000000000000000e+00),
    (1, 9.49999999999999956e-01, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 4.70000000000000000e+01, 2.40591525702704617e-09, 0.00000000000000000e+00),
    (1, -5.00000000000000444e-02, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 1.10000000000000000e+01, 3.55304780238130998e-03, 0.00000000000000000e+00),
    (1, 5.00000000000000444e-02, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 5.99999999999999978e-01, 6.40303062396888278e-01, 0.00000000000000000e+00),
    (1, -9.49999999999999956e-01, 0.00000000000000000e+00, 2.49999999999999972e-01, 0.00000000000000000e+00, 3.40000000000000000e+01, 1.37210246774799901e-09, 0.00000000000000000e+00),
    (1, 7.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 7.29999999999999982e+00, 1.12064869034916623e-01, 7.39878686967621564e-56),
    (1, -2.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 1.10000000000000001e-01, 4.39896642448256436e-01, -1.30130351233743553e-55),
    (1, 2.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 2.60000000000000000e+01, 5.06173166531456617e-06, 2.51448264881448280e-60),
    (1, -7.50000000000000000e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.00000000000000022e-01, 3.89999999999999991e+00, 3.69921389617182267e-02, 2.52881399154437077e-57),
    (1, 5.99999999999999978e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 2.00000000000000004e-02, -5.99851612156277608e-02, 2.43980912710368938e-56),
    (1, -4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 1.85000000000000000e+01, 2.79134971677805553e-05, 2.65158500700772840e-59),
    (1, 4.00000000000000022e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 1.69999999999999996e+00, 4.02645916279511518e-01, -3.65685633374745033e-55),
    (1, -5.99999999999999978e-01, 0.00000000000000000e+00, 0.00000000000000000e+00, 7.50000000000000000e-01, 4.70000000000000000e+01, 5.95615066984037834e-12, 1.14468356014172669e-66),
    (1, 6.50000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 1.10000000000000000e+01, 1.93873678581651075e-02, 0.00000000000000000e+00),
    (1, -3.49999999999999978e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 5.99999999999999978e-01, 5.21416622025240639e-01, 0.00000000000000000e+00),
    (1, 3.49999999999999978e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 3.40000000000000000e+01, 1.42154508542000164e-07, 0.00000000000000000e+00),
    (1, -6.50000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000028e-02, 0.00000000000000000e+00, 7.29999999999999982e+00, 6.13715002496175235e-03, 0.00000000000000000e+00),
    (1, 9.00000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 1.10000000000000001e-01, 1.09090564664659669e-02, 0.00000000000000000e+00),
    (1, -9.99999999999999778e-02, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 2.60000000000000000e+01, 1.61040866543435813e-06, 0.00000000000000000e+00),
    (1, 9.99999999999999778e-02, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 3.89999999999999991e+00, 1.57592659170206567e-01, 0.00000000000000000e+00),
    (1, -9.00000000000000022e-01, 0.00000000000000000e+00, 5.00000000000000167e-02, 0.00000000000000000e+00, 2.00000000000000004e-02, 4.66939683591510557e-01, 0.00000000000000000e+00),
];
