"""Published truncated values of F(I_{k,q}) used as regression targets.

Each string is truncated, not rounded, so a certified enclosure must agree
with every displayed digit.
"""

TABLE_QS = (2, 3, 4, 5, 7)

TABLE_VALUES = {
    2: {
        1: "1.4676602238442289268",
        2: "1.0644425954143168595",
        3: "0.9755638525263773555",
        4: "0.9562373433151932108",
        5: "0.9581408226316153830",
        6: "0.9661285846774159333",
        7: "0.9747368549520022143",
        8: "0.9820875563671306239",
        9: "0.9877477647269600411",
        10: "0.9918478580517178761",
    },
    3: {
        1: "1.5402654962770992783",
        2: "1.1301714500071343633",
        3: "1.0329809138654179703",
        4: "1.0039698809027713378",
        5: "0.9960179423616558785",
        6: "0.9949687972770260308",
        7: "0.9959150552841082468",
        8: "0.9971537408436136635",
        9: "0.9981715655684219998",
        10: "0.9988850772260466434",
    },
    4: {
        1: "1.5708306089585806605",
        2: "1.1544864845853626474",
        3: "1.0517959064091933064",
        4: "1.0178327413536777409",
        5: "1.0057528618201179388",
        6: "1.0015148661835156763",
        7: "1.0001513629475453519",
        8: "0.9998044985849281472",
        9: "0.9997818901532824166",
        10: "0.9998382721719850807",
    },
    5: {
        1: "1.5876369878229405564",
        2: "1.1668343411440889017",
        3: "1.0606722482320695710",
        4: "1.0239276909306761841",
        5: "1.0097501408648004439",
        6: "1.0040299319147160468",
        7: "1.0016773165460739756",
        8: "1.0007015961030813973",
        9: "1.0002951481314120617",
        10: "1.0001251569695533427",
    },
    7: {
        1: "1.6055616864329830894",
        2: "1.1790969073890668757",
        3: "1.0689297642298799167",
        4: "1.0292662613922721641",
        5: "1.0130607223966467259",
        6: "1.0060072704223504918",
        7: "1.0028205606817957574",
        8: "1.0013445588428900262",
        9: "1.0006484376681192577",
        10: "1.0003155548064037100",
    },
}

# q = 5 beyond k = 10 is printed as 1 + x; (mantissa digits, exponent)
Q5_EXCESS = {
    29: ("9.80759342", -11),
    30: ("4.90081887", -11),
}
