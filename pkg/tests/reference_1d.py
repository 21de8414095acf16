"""Reference L2 errors of the 1D reflection problem at t = 0.9, N = 17 * 2^r, r = 0..5."""

REFERENCE_1D = {
    (2, "characteristic", 0.99): [
        0.22612177643808343, 0.0859543687728942, 0.025028264463180117,
        0.006229654594888951, 0.001556347196596309, 0.00038903785155413304,
    ],
    (2, "non-characteristic", 0.99): [
        0.23090227904292934, 0.09107555965063646, 0.024964448614618117,
        0.0062289995409710724, 0.0015563424512535927, 0.0003890378168202516,
    ],
    (4, "characteristic", 0.99): [
        0.0822877307439926, 0.010554678467476425, 0.0011086930754160465,
        4.778874390799815e-05, 2.5482968544872185e-06, 1.5020766207244883e-07,
    ],
    (4, "non-characteristic", 0.99): [
        0.0700386417562426, 0.006254954137733173, 0.0006354218315982737,
        4.130886669612187e-05, 2.468774168442747e-06, 1.4897900560737402e-07,
    ],
    (6, "characteristic", 0.99): [
        0.18028446409985247, 0.01777050529095492, 0.0004734837362713266,
        8.326214791816387e-07, 1.2135232044208862e-08, 2.2385309093063844e-10,
    ],
    (6, "non-characteristic", 0.99): [
        0.06692898953673738, 0.006162596823061943, 0.00013440534241776264,
        3.644118449916648e-07, 3.5631361391609927e-09, 1.2917252971672303e-10,
    ],
    (2, "characteristic", 0.0): [
        0.13392948879742933, 0.03270300081843555, 0.004400824918720094,
        0.001015069906571923, 0.00024833662672998214, 6.173839915986293e-05,
    ],
    (2, "non-characteristic", 0.0): [
        0.1400146583195319, 0.02301081530254358, 0.004404525121558552,
        0.0010152205781219284, 0.0002483267521992366, 6.17379241261392e-05,
    ],
    (4, "characteristic", 0.0): [
        0.05657878404598931, 0.009838450825757763, 0.000331870298870656,
        1.1656278062457311e-05, 5.841846423320025e-07, 3.3725995165327314e-08,
    ],
    (4, "non-characteristic", 0.0): [
        0.06024308605745468, 0.004446838475684809, 0.00023370863351585732,
        1.0096311580913698e-05, 5.529582357360636e-07, 3.298209570986106e-08,
    ],
    (6, "characteristic", 0.0): [
        0.03174097436415166, 0.0067769968429472, 0.00031785180299593685,
        6.407005747980461e-06, 1.4106648821104527e-07, 3.1324823282679175e-09,
    ],
    (6, "non-characteristic", 0.0): [
        0.020637909292370225, 0.004958594650802197, 0.00010990796383758757,
        8.453147118697981e-07, 1.1106082681068746e-08, 2.5208637680473877e-10,
    ],
    (2, "characteristic", -0.99): [
        0.2539814501422496, 0.10044975326074823, 0.02529182756902668,
        0.006186082157190339, 0.0015382338854750114, 0.0003842771691100584,
    ],
    (2, "non-characteristic", -0.99): [
        0.3151468697171973, 0.09898277606845406, 0.02468139006585481,
        0.006149674374767716, 0.0015369783219745267, 0.0003842371079368138,
    ],
    (4, "characteristic", -0.99): [
        0.15602435288137395, 0.015512443396566157, 0.0006836175562566793,
        3.0820828346013364e-05, 1.894485313075684e-06, 1.2122621787407574e-07,
    ],
    (4, "non-characteristic", -0.99): [
        0.14305312497412534, 0.014421370485589561, 0.0005286586081128851,
        2.9255688794290078e-05, 1.8836301253017283e-06, 1.2114909432641091e-07,
    ],
    (6, "characteristic", -0.99): [
        0.18651619742638545, 0.004806496210456035, 0.0001976322705410779,
        1.2100713863327298e-05, 2.9390402190866045e-07, 6.473312452570765e-09,
    ],
    (6, "non-characteristic", -0.99): [
        0.11217626940800501, 0.005204484991306133, 7.056504910179448e-05,
        1.2969897691636655e-06, 2.7756019984694373e-08, 5.277819731362915e-10,
    ],
}
